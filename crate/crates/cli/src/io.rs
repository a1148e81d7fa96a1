use std::fs;
use std::io::Write;
use std::path::Path;

use curvtorus::{AnglePair, Point3, TorusGeometry};

use crate::error::CliError;

/// Writes to `out`, or stdout when `None`.
pub fn emit(out: Option<&Path>, bytes: &[u8]) -> Result<(), CliError> {
    match out {
        Some(path) => fs::write(path, bytes).map_err(|e| CliError::Io(format!("{}: {e}", path.display()))),
        None => std::io::stdout()
            .write_all(bytes)
            .map_err(|e| CliError::Io(format!("stdout: {e}"))),
    }
}

/// 17 significant digits, enough to round-trip any f64.
fn num(x: f64) -> String {
    format!("{x:.16e}")
}

pub fn pairs_csv(pairs: &[AnglePair]) -> String {
    let mut s = String::with_capacity(48 * (pairs.len() + 1));
    s.push_str("theta1,theta2\n");
    for p in pairs {
        s.push_str(&num(p.theta1));
        s.push(',');
        s.push_str(&num(p.theta2));
        s.push('\n');
    }
    s
}

pub fn points_csv(points: &[Point3]) -> String {
    let mut s = String::with_capacity(72 * (points.len() + 1));
    s.push_str("x,y,z\n");
    for p in points {
        s.push_str(&format!("{},{},{}\n", num(p.x), num(p.y), num(p.z)));
    }
    s
}

/// Reads a sample file written by `sample`. Point files are mapped back to
/// angles with the given geometry.
pub fn read_pairs(path: &Path, g: &TorusGeometry) -> Result<Vec<AnglePair>, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
    let mut lines = text.lines();
    let header = lines
        .next()
        .ok_or_else(|| CliError::invalid(format!("{}: empty sample file", path.display())))?;
    let width = match header.trim() {
        "theta1,theta2" => 2,
        "x,y,z" => 3,
        other => {
            return Err(CliError::invalid(format!(
                "{}: unknown header {other:?}",
                path.display()
            )))
        }
    };
    let mut pairs = Vec::new();
    for (i, line) in lines.enumerate() {
        if line.trim().is_empty() {
            continue;
        }
        let fields: Result<Vec<f64>, _> = line.split(',').map(|f| f.trim().parse::<f64>()).collect();
        let fields = match fields {
            Ok(v) if v.len() == width && v.iter().all(|x| x.is_finite()) => v,
            _ => {
                return Err(CliError::invalid(format!(
                    "{}: malformed row {}",
                    path.display(),
                    i + 2
                )))
            }
        };
        pairs.push(if width == 2 {
            AnglePair::new(fields[0], fields[1])
        } else {
            let (x, y, z) = (fields[0], fields[1], fields[2]);
            let rho = x.hypot(y) - g.major_radius();
            AnglePair::new(y.atan2(x), z.atan2(rho))
        });
    }
    if pairs.is_empty() {
        return Err(CliError::invalid(format!(
            "{}: sample file has no rows",
            path.display()
        )));
    }
    Ok(pairs)
}

pub fn to_json<T: serde::Serialize>(value: &T) -> Result<Vec<u8>, CliError> {
    let mut v = serde_json::to_vec_pretty(value).map_err(|e| CliError::Io(e.to_string()))?;
    v.push(b'\n');
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn seventeen_digits_round_trip() {
        for x in [0.1, std::f64::consts::PI, 2.0f64.sqrt(), 1e-300, 5e-324] {
            assert_eq!(num(x).parse::<f64>().unwrap(), x);
        }
    }

    #[test]
    fn points_map_back_to_angles() {
        let g = TorusGeometry::new(3.0, 1.5).unwrap();
        let p = AnglePair::new(1.0, 2.5);
        let dir = tempfile::tempdir().unwrap();
        let path = dir.path().join("p.csv");
        fs::write(&path, points_csv(&[g.embed(p)])).unwrap();
        let back = read_pairs(&path, &g).unwrap();
        assert!((back[0].theta1 - 1.0).abs() < 1e-12 && (back[0].theta2 - 2.5).abs() < 1e-12);
    }
}
