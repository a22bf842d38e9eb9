//! Central coefficients of Pascal's triangle.
//!
//! `H(x) = 1/(1-x)` gives the triangle `(x/(1-x))^k`; the central entries
//! are the central binomial coefficients, generated by `1/√(1-4x)`.
//!
//! ```bash
//! cargo run -p composita --example pascal_central
//! ```

use composita::render::triangle_plain;
use composita::{central_forward, composita_of, Builtin};

fn main() -> composita::Result<()> {
    let h = Builtin::PascalH;
    print!("{}", triangle_plain(&composita_of(&h.generator(5))?));

    let r = central_forward(&h.series(9), 10)?;
    println!("A(x)  = {}", r.a_series);
    println!("A'(x) = {}", r.central_gf);
    println!(
        "central diagonal of the triangle: {:?}",
        r.triangle
            .central_diagonal()
            .iter()
            .map(ToString::to_string)
            .collect::<Vec<_>>()
    );
    Ok(())
}
