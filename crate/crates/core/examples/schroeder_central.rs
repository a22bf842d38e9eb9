//! `H(x) = (1-x)/(1-2x)`: its triangle, the solution of `A = x H(A)` (the
//! little Schröder numbers) and the central coefficients `A'(x)`.
//!
//! ```bash
//! cargo run -p composita --example schroeder_central
//! ```

use composita::render::triangle_plain;
use composita::{central_forward, solve_functional_equation, verify_functional_equation, Builtin};

fn main() -> composita::Result<()> {
    let h = Builtin::A105306H;
    print!("{}", triangle_plain(&h.closed_form_composita(6)));

    let a = solve_functional_equation(&h.series(7), 7)?;
    println!("A(x)  = {a}");
    let (holds, residual) = verify_functional_equation(&a, &h.series(7))?;
    println!("A - x H(A) = {residual} (zero: {holds})");

    let f = central_forward(&h.series(7), 8)?.central_gf;
    println!("A'(x) = {f}");
    Ok(())
}
