//! Closed-form compositae of the builtin catalogue, checked entry by entry
//! against the convolution engine, plus the Stirling-number tables.
//!
//! ```bash
//! cargo run -p composita --example closed_forms
//! ```

use composita::builtins::{stirling1_signed, stirling1_unsigned, stirling2, CATALOG};
use composita::{composita_of, Builtin};

fn main() -> composita::Result<()> {
    let order = 10;
    for entry in CATALOG {
        let params = vec![composita::rational::int(2); entry.params.len()];
        let b = Builtin::from_spec(entry.name, &params)?;
        let same = b.closed_form_composita(order) == composita_of(&b.generator(order))?;
        println!(
            "{:<20} {:<28} closed form == engine: {same}",
            b.to_string(),
            entry.description
        );
    }

    println!();
    println!(" n  k  s(n,k)  |s(n,k)|  S(n,k)");
    for n in 1..=6 {
        for k in 1..=n {
            println!(
                "{n:>2} {k:>2} {:>7} {:>9} {:>7}",
                stirling1_signed(n, k).to_string(),
                stirling1_unsigned(n, k).to_string(),
                stirling2(n, k).to_string()
            );
        }
    }
    Ok(())
}
