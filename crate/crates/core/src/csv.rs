//! CSV emission helpers. All floats are written with 17 significant digits
//! so they parse back bit-identically.

use std::io::Write;

use crate::conjugate::GridRow;
use crate::error::Result;
use crate::point::Point;

/// 17 significant digits: lossless f64 round trip.
pub fn fmt_f64(x: f64) -> String {
    format!("{x:.16e}")
}

/// `x,y,err_bound` for interval systems, `x1,x2,y,err_bound` for planar
/// ones.
pub fn write_grid<W: Write>(out: &mut W, rows: &[GridRow]) -> Result<()> {
    let planar = rows.first().map_or(false, |r| r.x.dim() == 2);
    if planar {
        writeln!(out, "x1,x2,y,err_bound")?;
        for r in rows {
            let c = r.x.coords();
            writeln!(
                out,
                "{},{},{},{}",
                fmt_f64(c[0]),
                fmt_f64(c[1]),
                fmt_f64(r.y),
                fmt_f64(r.err_bound)
            )?;
        }
    } else {
        writeln!(out, "x,y,err_bound")?;
        for r in rows {
            writeln!(
                out,
                "{},{},{}",
                fmt_f64(r.x.as_scalar()),
                fmt_f64(r.y),
                fmt_f64(r.err_bound)
            )?;
        }
    }
    Ok(())
}

/// One point per row: `x` or `x1,x2`.
pub fn write_points<W: Write>(out: &mut W, points: &[Point]) -> Result<()> {
    let planar = points.first().map_or(false, |p| p.dim() == 2);
    writeln!(out, "{}", if planar { "x1,x2" } else { "x" })?;
    for p in points {
        let row: Vec<String> = p.coords().iter().map(|&c| fmt_f64(c)).collect();
        writeln!(out, "{}", row.join(","))?;
    }
    Ok(())
}

/// Labeled numeric columns, one `(label, value)` pair per row.
pub fn write_series<W: Write>(out: &mut W, header: &str, rows: &[(f64, f64)]) -> Result<()> {
    writeln!(out, "{header}")?;
    for (a, b) in rows {
        writeln!(out, "{},{}", fmt_f64(*a), fmt_f64(*b))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits_round_trip() {
        for &x in &[
            1.0 / 3.0,
            0.1,
            std::f64::consts::PI,
            1e-300,
            -7.25,
            0.9183,
        ] {
            let s = fmt_f64(x);
            let back: f64 = s.parse().unwrap();
            assert_eq!(back.to_bits(), x.to_bits(), "{s}");
        }
    }
}
