//! Comparing computed sequences with the b-files shipped in `fixtures/`,
//! and writing a new one.
//!
//! ```bash
//! cargo run -p composita --example bfile_compare
//! ```

use std::path::PathBuf;

use composita::bfile::{read_bfile, write_bfile, SequenceFile};
use composita::commands::{cmd_compare, Computed};
use composita::{central_forward, Builtin, SeriesSpec};

fn main() -> composita::Result<()> {
    let fixtures = PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures");
    for (what, spec, name, count) in [
        (Computed::Forward, "builtin:pascal_h", "A000984", 10),
        (Computed::SolveFe, "builtin:a105306_h", "A001003", 7),
        (Computed::Forward, "builtin:a105306_h", "A176479", 6),
        (Computed::Triangle, "builtin:a105306_h", "A105306", 21),
    ] {
        let spec = SeriesSpec::parse(spec)?;
        let report = cmd_compare(what, &spec, &fixtures.join(format!("{name}.b")), count)?;
        println!("{name}: {report}");
    }

    let dir = std::env::temp_dir().join("composita-example");
    std::fs::create_dir_all(&dir)?;
    let path = dir.join("central_binomials.b");
    let f = central_forward(&Builtin::PascalH.series(14), 15)?.central_gf;
    write_bfile(&SequenceFile::new(0, f.into_coeffs()), &path)?;
    let back = read_bfile(&path)?;
    println!("wrote {} terms to {}", back.values.len(), path.display());
    Ok(())
}
