use std::f64::consts::FRAC_PI_2;
fn main() {
    let k: f64 = 0.9999980047376851;
    let m = dk_core::elliptic::Modulus::new(k).unwrap();
    let p = dk_core::elliptic::complete_pair(m);
    let layer = (1.0 - k*k).sqrt().min(0.5);
    let q = dk_core::quad::adaptive_multi(
        |th: f64| { let s = th.sin(); 1.0/(1.0 - k*k*s*s).sqrt() },
        &[0.0, FRAC_PI_2 - layer, FRAC_PI_2], 1e-14).unwrap();
    println!("carlson K = {:.17e}", p.big_k);
    println!("quad    K = {:.17e}  est err {:.3e}", q.value, q.abs_err);
    println!("diff = {:.3e}", (p.big_k - q.value).abs());
    // python mpmath reference for this k:
    // K = ?
}
