//! The explicit homology Veech group elements `T, Z, E, F` of `L(m, n)`.

use crate::error::{Error, Result};
use crate::quad_order::{Order, QuadInt};
use crate::sl2::{IntMat, Mat2};

use super::Origami;

/// `E` in the catalog is the assembled action of the diagonal multi-twist
/// raised to this power.
pub const CATALOG_EXPONENT: i64 = -1;

/// One named generator.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CatalogEntry {
    pub label: &'static str,
    pub matrix: Mat2<QuadInt>,
    /// Where the matrix comes from, in words.
    pub provenance: &'static str,
}

impl CatalogEntry {
    /// The integer matrix formed by the first components.
    pub fn first_component(&self) -> IntMat {
        self.matrix.components().0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GeneratorCatalog {
    pub m: i64,
    pub n: i64,
    pub entries: Vec<CatalogEntry>,
}

impl GeneratorCatalog {
    pub fn matrices(&self) -> Vec<Mat2<QuadInt>> {
        self.entries.iter().map(|e| e.matrix).collect()
    }

    pub fn get(&self, label: &str) -> Option<&CatalogEntry> {
        self.entries.iter().find(|e| e.label == label)
    }
}

fn entry(
    order: Order,
    label: &'static str,
    provenance: &'static str,
    pairs: [(i64, i64); 4],
) -> Result<CatalogEntry> {
    let matrix = Mat2::from_pairs(order, pairs).map_err(|e| {
        Error::ValidationFailed(format!("{label}: entry {pairs:?} not in O_D ({e})"))
    })?;
    let (a1, a2) = matrix.components();
    for (i, c) in [a1, a2].iter().enumerate() {
        let det = c.a * c.d - c.b * c.c;
        if det != 1 {
            return Err(Error::ValidationFailed(format!(
                "{label}: component {} has determinant {det}",
                i + 1
            )));
        }
    }
    Ok(CatalogEntry { label, matrix, provenance })
}

/// `u·𝟙 + v·w` as a component pair.
fn uw(d: i64, u: i64, v: i64) -> (i64, i64) {
    (u, u + v * d)
}

/// Exact quotient, refusing to round.
fn div(a: i64, b: i64) -> Result<i64> {
    if a % b != 0 {
        return Err(Error::ValidationFailed(format!("{a}/{b} is not integral")));
    }
    Ok(a / b)
}

/// The steep-direction matrix `F`, when the shape has one.
fn f_matrix(m: i64, n: i64, d: i64) -> Result<Option<[(i64, i64); 4]>> {
    Ok(Some(match (n, m.rem_euclid(4)) {
        (3, 1) | (3, 3) => [
            (5 - 2 * d, 5 - d),
            (4, 4 - d),
            (-(d - 2) * (d - 2), d - 4),
            (2 * d - 3, d - 3),
        ],
        (2, 2) => [
            (1 - div(3 * m, 2)?, 2 - div(m, 2)?),
            (3, 2 - m),
            (-div(3 * m * m, 4)?, div(m - 2, 4)?),
            (1 + div(3 * m, 2)?, div(m, 2)?),
        ],
        (2, 0) => [
            (1 - 3 * m, 3 - m),
            (6, -2 * (m - 2)),
            (-div(3 * m * m, 2)?, div(m - 2, 2)?),
            (1 + 3 * m, m - 1),
        ],
        (2, _) => [(1 - 6 * m, 5 - 2 * m), (12, -4 * (m - 2)), (-3 * m * m, m - 2), (1 + 6 * m, 2 * m - 3)],
        _ => return Ok(None),
    }))
}

pub fn generator_catalog(o: &Origami) -> Result<GeneratorCatalog> {
    let (m, n, d) = (o.m, o.n, o.d);
    let order = o.order();
    let one = (1, 1);
    let zero = (0, 0);
    let mut entries = Vec::new();
    if (m, n) == (2, 2) {
        entries.push(entry(order, "Z", "vertical twist, (1, 0; 2 - w, 1)", [one, zero, uw(d, 2, -1), one])?);
        entries.push(entry(order, "S", "rotation by a quarter turn", [zero, one, (-1, -1), zero])?);
        return Ok(GeneratorCatalog { m, n, entries });
    }
    entries.push(entry(order, "T", "horizontal twist, upper-right entry n - w", [one, uw(d, n, -1), zero, one])?);
    entries.push(entry(order, "Z", "vertical twist, lower-left entry m - w", [one, zero, uw(d, m, -1), one])?);
    let dw = uw(d, d, -1);
    entries.push(entry(
        order,
        "E",
        "single cylinder in direction (1, 1), paired with the identity",
        [(1 - dw.0, 1 - dw.1), dw, (-dw.0, -dw.1), (1 + dw.0, 1 + dw.1)],
    )?);
    if let Some(f) = f_matrix(m, n, d)? {
        entries.push(entry(order, "F", "cylinder decomposition in direction (2/m, 1)", f)?);
    }
    Ok(GeneratorCatalog { m, n, entries })
}

/// Checks `E` against the assembled homology action of the diagonal
/// multi-twist.
pub fn check_diagonal_exponent(o: &Origami) -> Result<()> {
    let cat = generator_catalog(o)?;
    let Some(e) = cat.get("E") else {
        return Err(Error::NotApplicable(format!("{o} has no E")));
    };
    let order = o.order();
    let assembled = super::homology::assemble_pair(&super::homology::e_prime_action(o.m, o.n), o.m, o.n)?;
    if assembled.pow(&order, CATALOG_EXPONENT)? != e.matrix {
        return Err(Error::ValidationFailed(format!("{o}: E is not the assembled twist to the power {CATALOG_EXPONENT}")));
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::Integers;

    #[test]
    fn diagonal_exponent() {
        for m in 2..=10 {
            for n in 2..=10 {
                let o = Origami::new(m, n).unwrap();
                if (m, n) != (2, 2) {
                    check_diagonal_exponent(&o).unwrap();
                }
            }
        }
    }

    #[test]
    fn l22() {
        let c = generator_catalog(&Origami::new(2, 2).unwrap()).unwrap();
        let labels: Vec<_> = c.entries.iter().map(|e| e.label).collect();
        assert_eq!(labels, ["Z", "S"]);
        let q = Order::new(3).unwrap();
        assert_eq!(c.entries[0].matrix, Mat2::new(q.one(), q.zero(), q.from_coords(2, -1).unwrap(), q.one()));
        assert_eq!(c.entries[1].matrix, Mat2::new(q.zero(), q.one(), q.int(-1), q.zero()));
    }

    #[test]
    fn f_upper_right() {
        for (m, n, u, v) in [(4, 2, 6, -2), (6, 2, 3, -1), (5, 2, 12, -4), (5, 3, 4, -1), (7, 3, 4, -1)] {
            let c = generator_catalog(&Origami::new(m, n).unwrap()).unwrap();
            assert_eq!(c.get("F").unwrap().matrix.b.coords(), (u, v), "L({m},{n})");
        }
        assert!(generator_catalog(&Origami::new(4, 3).unwrap()).unwrap().get("F").is_none());
        assert!(generator_catalog(&Origami::new(3, 4).unwrap()).unwrap().get("F").is_none());
    }

    #[test]
    fn all_valid() {
        for m in 2..=12 {
            for n in 2..=12 {
                let o = Origami::new(m, n).unwrap();
                let c = generator_catalog(&o).unwrap();
                for e in &c.entries {
                    assert!(e.matrix.is_unimodular(&o.order()).unwrap());
                    assert!(e.first_component().is_unimodular(&Integers).unwrap());
                }
            }
        }
    }

    #[test]
    fn printed_w_form_of_f_disagrees() {
        // the w-form lower-right entry 1 + (2(d-2) + w) is not the pair form
        for m in [3, 5, 7, 9] {
            let d = m + 2;
            let printed = uw(d, 1 + 2 * (d - 2), 1);
            assert_ne!(printed, (2 * d - 3, d - 3));
            assert_eq!(uw(d, 1 + 2 * (d - 2), -1), (2 * d - 3, d - 3));
        }
    }
}
