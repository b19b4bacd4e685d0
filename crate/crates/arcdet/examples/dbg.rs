use arcdet::opuc::ArcWeight;
use arcdet::rh::{ConformalFrame, SzegoData};
use num_complex::Complex64;

fn main() {
    // a(conj z) vs conj(a(z))
    let f = ConformalFrame::new(0.9).unwrap();
    for z in [Complex64::new(1.4, 0.3), Complex64::new(-0.5, -0.8)] {
        let a1 = f.a(z).unwrap();
        let a2 = f.a(z.conj()).unwrap();
        println!("z={z}: a(z)={a1} a(conj z)={a2} conj(a(z))={}", a1.conj());
    }
    for x in [1.5, 3.0, -2.0] {
        let a = f.a(Complex64::new(x, 0.0)).unwrap();
        println!("|a({x})| = {}", a.norm());
    }
    // D_infinity imaginary residue at tiny alpha
    let weight = ArcWeight::callable(1e-4, |theta| theta.cos().exp()).unwrap();
    match SzegoData::new(&weight, 256) {
        Ok(s) => println!("d_inf = {}", s.d_infinity()),
        Err(e) => println!("szego err: {e}"),
    }
}
