//! Text renderings of triangles and sequences. Rationals are always
//! printed exactly, as `p/q` in lowest terms or as plain integers.

use std::fmt;
use std::str::FromStr;

use serde_json::{json, Value};

use crate::bfile::SequenceFile;
use crate::composita::Composita;
use crate::error::{Error, Result};
use crate::rational::Rational;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum Format {
    #[default]
    Plain,
    Csv,
    Json,
    Bfile,
}

impl FromStr for Format {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "plain" => Ok(Format::Plain),
            "csv" => Ok(Format::Csv),
            "json" => Ok(Format::Json),
            "bfile" => Ok(Format::Bfile),
            other => Err(Error::UnsupportedFormat {
                format: other.to_string(),
                what: "output",
            }),
        }
    }
}

impl fmt::Display for Format {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Format::Plain => "plain",
            Format::Csv => "csv",
            Format::Json => "json",
            Format::Bfile => "bfile",
        })
    }
}

fn strings(values: &[Rational]) -> Vec<String> {
    values.iter().map(ToString::to_string).collect()
}

pub fn triangle_json(c: &Composita) -> Value {
    json!({
        "order": c.order(),
        "rows": c.rows().iter().map(|r| strings(r)).collect::<Vec<_>>(),
    })
}

/// Rows centred under one another, one row per line.
pub fn triangle_plain(c: &Composita) -> String {
    let cells: Vec<Vec<String>> = c.rows().iter().map(|r| strings(r)).collect();
    let width = cells.iter().flatten().map(String::len).max().unwrap_or(1);
    let order = c.order();
    let mut out = String::new();
    for (i, row) in cells.iter().enumerate() {
        let indent = (order - i - 1) * (width + 1) / 2;
        let mut line = " ".repeat(indent);
        let body: Vec<String> = row.iter().map(|s| format!("{s:^width$}")).collect();
        line.push_str(&body.join(" "));
        out.push_str(line.trim_end());
        out.push('\n');
    }
    out
}

pub fn render_triangle(c: &Composita, format: Format) -> Result<String> {
    Ok(match format {
        Format::Plain => triangle_plain(c),
        Format::Csv => {
            let mut out = String::from("n,k,value\n");
            for (n, row) in c.rows().iter().enumerate() {
                for (k, v) in row.iter().enumerate() {
                    out.push_str(&format!("{},{},{}\n", n + 1, k + 1, v));
                }
            }
            out
        }
        Format::Json => format!("{}\n", triangle_json(c)),
        Format::Bfile => {
            let flat: Vec<Rational> = c.rows().iter().flatten().cloned().collect();
            SequenceFile::new(1, flat).to_bfile_string()?
        }
    })
}

pub fn render_sequence(values: &[Rational], offset: i64, format: Format) -> Result<String> {
    Ok(match format {
        Format::Plain => format!("{}\n", strings(values).join(" ")),
        Format::Csv => {
            let mut out = String::from("n,value\n");
            for (i, v) in (offset..).zip(values) {
                out.push_str(&format!("{i},{v}\n"));
            }
            out
        }
        Format::Json => format!(
            "{}\n",
            json!({ "offset": offset, "values": strings(values) })
        ),
        Format::Bfile => SequenceFile::new(offset, values.to_vec()).to_bfile_string()?,
    })
}

pub fn sequence_json(values: &[Rational]) -> Value {
    json!(strings(values))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};
    use crate::series::Series;

    fn pascal() -> Composita {
        Composita::of(&Series::from_ints(&[0, 1, 1, 1, 1, 1], 5)).unwrap()
    }

    #[test]
    fn plain_triangle() {
        let expected = "    1\n   1 1\n  1 2 1\n 1 3 3 1\n1 4 6 4 1\n";
        assert_eq!(triangle_plain(&pascal()), expected);
    }

    #[test]
    fn csv_and_json() {
        let csv = render_triangle(&pascal(), Format::Csv).unwrap();
        assert!(csv.starts_with("n,k,value\n1,1,1\n2,1,1\n"));
        assert!(csv.ends_with("5,4,4\n5,5,1\n"));
        let c = Composita::from_rows(vec![vec![int(1)], vec![ratio(-1, 3), int(1)]]).unwrap();
        assert_eq!(
            render_triangle(&c, Format::Json).unwrap(),
            "{\"order\":2,\"rows\":[[\"1\"],[\"-1/3\",\"1\"]]}\n"
        );
        assert!(render_triangle(&c, Format::Bfile).is_err());
    }

    #[test]
    fn sequences() {
        let v = [int(1), ratio(1, 2)];
        assert_eq!(render_sequence(&v, 0, Format::Plain).unwrap(), "1 1/2\n");
        assert_eq!(
            render_sequence(&v, 0, Format::Csv).unwrap(),
            "n,value\n0,1\n1,1/2\n"
        );
        assert_eq!(
            render_sequence(&v, 3, Format::Json).unwrap(),
            "{\"offset\":3,\"values\":[\"1\",\"1/2\"]}\n"
        );
        assert_eq!(
            render_sequence(&[int(2)], 1, Format::Bfile).unwrap(),
            "1 2\n"
        );
        assert!("xml".parse::<Format>().is_err());
    }
}
