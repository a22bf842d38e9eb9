//! The inverse problem: find the triangle whose central coefficients are
//! the Catalan numbers.
//!
//! ```bash
//! cargo run -p composita --example catalan_inverse
//! ```

use composita::render::triangle_plain;
use composita::{central_forward, central_inverse_with, Builtin, InverseOptions, ReciprocalRoute};

fn main() -> composita::Result<()> {
    let f = Builtin::CatalanGf.series(8);
    let options = InverseOptions {
        route: ReciprocalRoute::Series,
        check: true,
    };
    let r = central_inverse_with(&f, 9, options)?;
    println!("H(x) = {}", r.h_series);
    print!("{}", triangle_plain(&r.triangle));

    let lemma = central_inverse_with(
        &f,
        9,
        InverseOptions {
            route: ReciprocalRoute::Lemma,
            ..options
        },
    )?;
    println!("alternating-sum route agrees: {}", lemma == r);

    let back = central_forward(&r.h_series, 9)?.central_gf;
    println!("central coefficients recovered: {back}");
    Ok(())
}
