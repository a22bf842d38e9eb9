//! `H(x) = x cot x`. The triangle of `x² cot x` has rational entries, the
//! functional equation is solved by `arctan x`, and the central
//! coefficients are those of `1/(1+x²)`.
//!
//! ```bash
//! cargo run -p composita --example cot_arctan
//! ```

use composita::render::triangle_plain;
use composita::{central_forward, composita_of, Builtin};

fn main() -> composita::Result<()> {
    let h = Builtin::Xcotx;
    println!("x cot x = {}", h.series(8));

    let engine = composita_of(&h.generator(7))?;
    print!("{}", triangle_plain(&engine));
    println!(
        "closed form agrees: {}",
        engine == h.closed_form_composita(7)
    );

    let r = central_forward(&h.series(7), 8)?;
    println!("A(x)  = {}", r.a_series);
    println!("A'(x) = {}", r.central_gf);
    Ok(())
}
