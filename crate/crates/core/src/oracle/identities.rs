use std::fmt;

use num_complex::Complex64;
use serde::Serialize;

use super::series::{
    alt_hurwitz_zeta, chi, chi_star, hurwitz_zeta, lerch_l, lerch_l_star, unit_root, SeriesEstimate,
};
use crate::error::{Error, Result};

/// A decomposition of a periodic series at a rational point into a finite
/// combination of Hurwitz-type zeta values.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Identity {
    /// `l_s(p/q) = q^{-s} sum_a zeta(s, a/q) e^{2 pi i a p/q}`
    LerchHurwitz,
    /// `chi_s(e^{i pi p/q}) = (2q)^{-s} sum_a zeta(s, (2a-1)/(2q)) e^{i pi (2a-1) p/q}`
    ChiHurwitz,
    /// `l*_s(p/q) = q^{-s} sum_a (-1)^{a-1} e^{2 pi i a p/q} Z(s, a/q)`,
    /// `Z = zeta*` for odd `q` and `zeta` for even `q`
    AltLerchHurwitz,
    /// `chi*_s(e^{i pi p/q}) = (2q)^{-s} sum_a (-1)^{a-1} e^{i pi (2a-1) p/q} Z(s, (2a-1)/(2q))`
    AltChiHurwitz,
}

impl Identity {
    pub const ALL: [Identity; 4] = [
        Identity::LerchHurwitz,
        Identity::ChiHurwitz,
        Identity::AltLerchHurwitz,
        Identity::AltChiHurwitz,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::LerchHurwitz => "lerch-hurwitz",
            Identity::ChiHurwitz => "chi-hurwitz",
            Identity::AltLerchHurwitz => "alt-lerch-hurwitz",
            Identity::AltChiHurwitz => "alt-chi-hurwitz",
        }
    }

    fn alternating(self) -> bool {
        matches!(self, Identity::AltLerchHurwitz | Identity::AltChiHurwitz)
    }

    fn lhs(self, s: f64, p: u64, q: u64, tol: f64) -> Result<SeriesEstimate> {
        match self {
            Identity::LerchHurwitz => lerch_l(s, p, q, tol),
            Identity::ChiHurwitz => chi(s, p, q, tol),
            Identity::AltLerchHurwitz => lerch_l_star(s, p, q, tol),
            Identity::AltChiHurwitz => chi_star(s, p, q, tol),
        }
    }

    /// Right side; the bound accumulates the bound of every zeta value.
    fn rhs(self, s: f64, p: u64, q: u64, tol: f64) -> Result<(Complex64, f64)> {
        let per_term = tol / q as f64;
        let half_offsets = matches!(self, Identity::ChiHurwitz | Identity::AltChiHurwitz);
        let use_alt = self.alternating() && q % 2 == 1;
        let mut value = Complex64::new(0.0, 0.0);
        let mut bound = 0.0;
        for alpha in 1..=q {
            let (a, root) = if half_offsets {
                (
                    (2 * alpha - 1) as f64 / (2 * q) as f64,
                    unit_root(((2 * alpha - 1) * p) as i64, 2 * q),
                )
            } else {
                (alpha as f64 / q as f64, unit_root((alpha * p) as i64, q))
            };
            let zeta = if use_alt {
                alt_hurwitz_zeta(s, a, per_term)?
            } else {
                hurwitz_zeta(s, a, per_term)?
            };
            let sign = if self.alternating() && alpha % 2 == 0 { -1.0 } else { 1.0 };
            value += root * zeta.value * sign;
            bound += zeta.tail_bound;
        }
        let scale = if half_offsets { (2 * q) as f64 } else { q as f64 }.powf(-s);
        Ok((value * scale, bound * scale))
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// One `(identity, s, p, q)` check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DecompositionRow {
    pub identity: Identity,
    pub s: f64,
    pub p: u64,
    pub q: u64,
    /// `"odd"` or `"even"` parity of `q` for the alternating identities.
    pub branch: Option<&'static str>,
    pub lhs: [f64; 2],
    pub rhs: [f64; 2],
    pub residual: f64,
    /// Combined truncation bound of both sides.
    pub bound: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct DecompositionReport {
    pub notes: Vec<String>,
    pub tol: f64,
    pub rows: Vec<DecompositionRow>,
    pub max_residual: f64,
}

impl DecompositionReport {
    pub fn pass(&self) -> bool {
        self.max_residual < self.tol
    }

    /// Largest residual per identity, in [`Identity::ALL`] order.
    pub fn max_by_identity(&self) -> Vec<(Identity, f64)> {
        Identity::ALL
            .iter()
            .map(|&id| {
                let worst = self
                    .rows
                    .iter()
                    .filter(|r| r.identity == id)
                    .map(|r| r.residual)
                    .fold(0.0, f64::max);
                (id, worst)
            })
            .collect()
    }
}

impl fmt::Display for DecompositionReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for note in &self.notes {
            writeln!(f, "# {note}")?;
        }
        writeln!(f, "identity\ts\tp\tq\tbranch\tresidual\tbound")?;
        for r in &self.rows {
            writeln!(
                f,
                "{}\t{}\t{}\t{}\t{}\t{:.3e}\t{:.3e}",
                r.identity,
                r.s,
                r.p,
                r.q,
                r.branch.unwrap_or("-"),
                r.residual,
                r.bound
            )?;
        }
        for (id, worst) in self.max_by_identity() {
            writeln!(f, "max residual {id}: {worst:.3e}")?;
        }
        write!(
            f,
            "max residual {:.3e} {} tol {:e}",
            self.max_residual,
            if self.pass() { "<" } else { ">=" },
            self.tol
        )
    }
}

/// Checks all four decompositions for every `s` in `s_list`, `1 <= q <= max_q`
/// and `1 <= p <= q`. Both sides use truncations with bound `tol / 8`.
pub fn check_decompositions(s_list: &[f64], max_q: u64, tol: f64) -> Result<DecompositionReport> {
    if tol.is_nan() || tol <= 0.0 {
        return Err(Error::InvalidArgument(format!("tolerance must be positive, got {tol}")));
    }
    if max_q == 0 {
        return Err(Error::InvalidArgument("max q must be >= 1".into()));
    }
    if let Some(bad) = s_list.iter().find(|&&s| s.is_nan() || s <= 1.0) {
        return Err(Error::Domain(format!("series checks need s > 1, got {bad}")));
    }
    let side_tol = tol / 8.0;
    let mut rows = Vec::new();
    for &s in s_list {
        for identity in Identity::ALL {
            for q in 1..=max_q {
                for p in 1..=q {
                    let lhs = identity.lhs(s, p, q, side_tol)?;
                    let (rhs, rhs_bound) = identity.rhs(s, p, q, side_tol)?;
                    rows.push(DecompositionRow {
                        identity,
                        s,
                        p,
                        q,
                        branch: identity
                            .alternating()
                            .then_some(if q % 2 == 1 { "odd" } else { "even" }),
                        lhs: [lhs.value.re, lhs.value.im],
                        rhs: [rhs.re, rhs.im],
                        residual: (lhs.value - rhs).norm(),
                        bound: lhs.tail_bound + rhs_bound,
                    });
                }
            }
        }
    }
    let max_residual = rows.iter().map(|r| r.residual).fold(0.0, f64::max);
    Ok(DecompositionReport {
        notes: vec![
            "alt-chi-hurwitz: left side read as chi*_s(e^{i pi p/q})".into(),
            "alt-chi-hurwitz: right side normalized by (2q)^{-s}, since 2k+1 = (2a-1) + 2jq".into(),
        ],
        tol,
        rows,
        max_residual,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn q_one_collapse() {
        let r = check_decompositions(&[2.0], 1, 1e-10).unwrap();
        assert_eq!(r.rows.len(), 4);
        assert!(r.pass(), "{r}");
        let lerch = &r.rows[0];
        let zeta2 = std::f64::consts::PI.powi(2) / 6.0;
        assert!((lerch.lhs[0] - zeta2).abs() < 1e-10);
    }

    #[test]
    fn both_branches_small_q() {
        let r = check_decompositions(&[2.0], 4, 1e-10).unwrap();
        assert!(r.pass(), "{r}");
        assert!(r.rows.iter().any(|row| row.branch == Some("odd")));
        assert!(r.rows.iter().any(|row| row.branch == Some("even")));
        assert!(r.rows.iter().all(|row| row.bound < 1e-10));
    }

    #[test]
    fn bare_q_normalization_fails() {
        // the (2q)^{-s} factor matters: the q^{-s} variant is off by 2^s
        let (rhs, _) = Identity::AltChiHurwitz.rhs(2.0, 1, 3, 1e-12).unwrap();
        let lhs = chi_star(2.0, 1, 3, 1e-12).unwrap().value;
        assert!((lhs - rhs).norm() < 1e-11);
        assert!((lhs - rhs * 4.0).norm() > 1e-3);
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(check_decompositions(&[2.0], 3, 0.0).is_err());
        assert!(check_decompositions(&[1.0], 3, 1e-10).is_err());
        assert!(check_decompositions(&[2.0], 0, 1e-10).is_err());
    }
}
