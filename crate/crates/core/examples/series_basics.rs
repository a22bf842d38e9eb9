//! Exact truncated power series: products, reciprocals, composition and
//! reversion.
//!
//! ```bash
//! cargo run -p composita --example series_basics
//! ```

use composita::rational::ratio;
use composita::{Builtin, Series};

fn main() -> composita::Result<()> {
    let order = 6;
    let one_minus_x = Series::from_ints(&[1, -1], order);
    let geometric = one_minus_x.reciprocal()?;
    println!("1/(1-x)        = {geometric}");

    let half = Series::new(vec![ratio(1, 2), ratio(-2, 4)], order);
    println!("1/2 - 2/4 x    = {half}");

    let c = Builtin::CatalanC.series(order);
    println!("C(x)           = {c}");
    println!("C(x)^2         = {}", c.pow(2));
    println!("C'(x)          = {}", c.derivative());

    // C satisfies C = x + C², so its compositional inverse is t - t².
    let inverse = c.revert()?;
    println!("C^(-1)(t)      = {inverse}");
    println!("C(C^(-1)(t))   = {}", c.compose(&inverse)?);

    let log_plus_2x = Series::new(
        (0..=order)
            .map(|n| match n {
                0 => ratio(0, 1),
                1 => ratio(1, 1),
                _ => ratio(-1, n as i64),
            })
            .collect(),
        order,
    );
    println!("log(1-C)+2C    = {}", log_plus_2x.compose(&c)?);
    Ok(())
}
