//! For any `H` with `H(0) ≠ 0` and `A = x H(A)`,
//! `n [xⁿ] A^k = k [x^(n-k)] H^n`. This checks it for a user-chosen `H`.
//!
//! ```bash
//! cargo run -p composita --example lagrange_identity -- "coeffs:[2,-1/3,5]"
//! ```

use composita::rational::int;
use composita::{composita_of, solve_functional_equation, SeriesSpec};

fn main() -> composita::Result<()> {
    let text = std::env::args()
        .nth(1)
        .unwrap_or_else(|| "coeffs:[1,1/2,-3,2/7]".into());
    let spec = SeriesSpec::parse(&text)?;
    let order = 8;
    let h = spec.series(order);
    let a = solve_functional_equation(&h, order)?;
    println!("H(x) = {h}");
    println!("A(x) = {a}");

    let powers = composita_of(&a)?;
    let mut checked = 0;
    for n in 1..=order {
        let hn = h.pow(n);
        for k in 1..=n {
            let lhs = powers.entry(n, k) * int(n as i64);
            let rhs = hn.coeff(n - k) * int(k as i64);
            assert_eq!(lhs, rhs, "identity fails at ({n},{k})");
            checked += 1;
        }
    }
    println!("identity holds for all {checked} pairs 1 <= k <= n <= {order}");
    Ok(())
}
