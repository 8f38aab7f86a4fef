//! Hankel, deleted-Hankel and combined matrices over Z[t], with exact
//! determinants via fraction-free Bareiss elimination.

use std::fmt;

use num_bigint::BigInt;
use num_traits::Zero;

use crate::error::{Error, Result};
use crate::poly::Poly;
use crate::report::{Check, VerificationReport};
use crate::schroeder::{seq_poly, SequenceKind};

/// Dense square matrix of polynomials. Row/column indices are 1-based in the
/// public API, matching the usual matrix displays; the 0x0 matrix is valid
/// and has determinant 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyMatrix {
    n: usize,
    entries: Vec<Poly>,
}

impl PolyMatrix {
    /// Builds an n x n matrix from a 1-based entry function.
    pub fn from_fn(n: usize, mut entry: impl FnMut(usize, usize) -> Poly) -> Self {
        let mut entries = Vec::with_capacity(n * n);
        for row in 1..=n {
            for col in 1..=n {
                entries.push(entry(row, col));
            }
        }
        PolyMatrix { n, entries }
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Entry at 1-based (row, col).
    pub fn get(&self, row: usize, col: usize) -> &Poly {
        assert!(
            (1..=self.n).contains(&row) && (1..=self.n).contains(&col),
            "index ({row},{col}) outside 1..={}",
            self.n
        );
        &self.entries[(row - 1) * self.n + (col - 1)]
    }

    pub fn transpose(&self) -> PolyMatrix {
        PolyMatrix::from_fn(self.n, |r, c| self.get(c, r).clone())
    }

    /// Exact determinant by fraction-free Bareiss elimination with row
    /// pivoting. Every division is exact over an integral domain; a failed
    /// division therefore signals an implementation bug and propagates as
    /// `NonExactDivision`.
    pub fn determinant(&self) -> Result<Poly> {
        let n = self.n;
        if n == 0 {
            return Ok(Poly::one());
        }
        let mut m: Vec<Vec<Poly>> = (0..n)
            .map(|r| self.entries[r * n..(r + 1) * n].to_vec())
            .collect();
        let mut sign_flip = false;
        let mut prev_pivot = Poly::one();
        for k in 0..n - 1 {
            // first nonzero pivot in column k, searching downward
            let Some(pivot_row) = (k..n).find(|&r| !m[r][k].is_zero()) else {
                return Ok(Poly::zero());
            };
            if pivot_row != k {
                m.swap(k, pivot_row);
                sign_flip = !sign_flip;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let num = &(&m[k][k] * &m[i][j]) - &(&m[i][k] * &m[k][j]);
                    m[i][j] = num.div_exact(&prev_pivot)?;
                }
                m[i][k] = Poly::zero();
            }
            prev_pivot = m[k][k].clone();
        }
        let det = m[n - 1][n - 1].clone();
        Ok(if sign_flip { -det } else { det })
    }
}

/// Declarative description of one of the named matrices: family (H = large
/// sequence, G = small), shift k, order n, and at most one of a deleted
/// column index or an (alpha, beta) combination. The two decorations never
/// combine; combined determinants expand into deleted ones instead.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MatrixSpec {
    pub family: SequenceKind,
    pub k: usize,
    pub n: usize,
    pub variant: Variant,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Variant {
    /// Entry (i,j) = a_{k+i+j-2}.
    Plain,
    /// From the (n+1)-order matrix, delete the last row and column i+1:
    /// entry (i,j) = a_{k+i+j-2} for j <= i_del, a_{k+i+j-1} beyond.
    Deleted(usize),
    /// Entry (i,j) = alpha*a_{k+i+j-2} + beta*a_{k+i+j-1}.
    Combined { alpha: BigInt, beta: BigInt },
}

impl MatrixSpec {
    pub fn plain(family: SequenceKind, k: usize, n: usize) -> Self {
        MatrixSpec {
            family,
            k,
            n,
            variant: Variant::Plain,
        }
    }

    pub fn deleted(family: SequenceKind, k: usize, n: usize, i: usize) -> Self {
        MatrixSpec {
            family,
            k,
            n,
            variant: Variant::Deleted(i),
        }
    }

    pub fn combined(family: SequenceKind, k: usize, n: usize, alpha: BigInt, beta: BigInt) -> Self {
        MatrixSpec {
            family,
            k,
            n,
            variant: Variant::Combined { alpha, beta },
        }
    }

    pub fn family_letter(&self) -> char {
        match self.family {
            SequenceKind::Large => 'H',
            SequenceKind::Small => 'G',
        }
    }

    pub fn to_json(&self) -> serde_json::Value {
        let mut obj = serde_json::json!({
            "family": self.family_letter().to_string(),
            "k": self.k,
            "n": self.n,
        });
        match &self.variant {
            Variant::Plain => {}
            Variant::Deleted(i) => obj["deleted"] = serde_json::json!(i),
            Variant::Combined { alpha, beta } => {
                obj["alpha"] = crate::poly::bigint_json(alpha);
                obj["beta"] = crate::poly::bigint_json(beta);
            }
        }
        obj
    }
}

impl fmt::Display for MatrixSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}(k={}, n={}", self.family_letter(), self.k, self.n)?;
        match &self.variant {
            Variant::Plain => {}
            Variant::Deleted(i) => write!(f, ", deleted={i}")?,
            Variant::Combined { alpha, beta } => write!(f, ", alpha={alpha}, beta={beta}")?,
        }
        write!(f, ")")
    }
}

/// Materializes the matrix a spec describes, entries pulled from the
/// sequence engine.
pub fn build(spec: &MatrixSpec) -> Result<PolyMatrix> {
    let (family, k, n) = (spec.family, spec.k, spec.n);
    let entry_plain = move |r: usize, c: usize| seq_poly(family, k + r + c - 2);
    match &spec.variant {
        Variant::Plain => Ok(PolyMatrix::from_fn(n, entry_plain)),
        Variant::Deleted(i) => {
            if *i > n {
                return Err(Error::IndexOutOfRange { index: *i, max: n });
            }
            let i = *i;
            Ok(PolyMatrix::from_fn(n, |r, c| {
                if c <= i {
                    seq_poly(family, k + r + c - 2)
                } else {
                    seq_poly(family, k + r + c - 1)
                }
            }))
        }
        Variant::Combined { alpha, beta } => Ok(PolyMatrix::from_fn(n, |r, c| {
            let low = seq_poly(family, k + r + c - 2).scale(alpha);
            let high = seq_poly(family, k + r + c - 1).scale(beta);
            &low + &high
        })),
    }
}

/// Determinant of the matrix a spec describes.
pub fn det(spec: &MatrixSpec) -> Result<Poly> {
    build(spec)?.determinant()
}

/// Deleted-matrix determinant extended by the convention that an out-of-range
/// deleted index (i > n) yields 0. Keeps boundary instances of the deletion
/// recurrences well-typed.
pub fn det_deleted_or_zero(family: SequenceKind, k: usize, n: usize, i: usize) -> Result<Poly> {
    if i > n {
        return Ok(Poly::zero());
    }
    det(&MatrixSpec::deleted(family, k, n, i))
}

/// Expands the combined determinant as the weighted sum of deleted-matrix
/// determinants: det(combined) = sum_i alpha^i beta^(n-i) det(deleted at i).
pub fn det_combo_via_expansion(
    family: SequenceKind,
    k: usize,
    n: usize,
    alpha: &BigInt,
    beta: &BigInt,
) -> Result<Poly> {
    let mut total = Poly::zero();
    for i in 0..=n {
        let coeff = alpha.pow(i as u32) * beta.pow((n - i) as u32);
        if coeff.is_zero() {
            continue;
        }
        let d = det(&MatrixSpec::deleted(family, k, n, i))?;
        total = &total + &d.scale(&coeff);
    }
    Ok(total)
}

/// Desnanot-Jacobi condensation on the shifted family:
/// det(A_{n+1}^{(k)}) det(A_{n-1}^{(k+2)}) =
/// det(A_n^{(k)}) det(A_n^{(k+2)}) - det(A_n^{(k+1)})^2.
pub fn dodgson_check(family: SequenceKind, k: usize, n: usize) -> Result<VerificationReport> {
    assert!(n >= 1, "condensation needs n >= 1");
    let check = Check::new("hankel.dodgson")
        .param("family", if family == SequenceKind::Large { "H" } else { "G" })
        .param("k", k)
        .param("n", n);
    let d = |k, n| det(&MatrixSpec::plain(family, k, n));
    let lhs = &d(k, n + 1)? * &d(k + 2, n - 1)?;
    let rhs = &(&d(k, n)? * &d(k + 2, n)?) - &d(k + 1, n)?.pow(2);
    Ok(check.finish(lhs, rhs))
}

/// Closed forms: det H_n^(0) = (1+t)^C(n,2), det H_n^(1) = (1+t)^C(n+1,2),
/// and at t=1 both small-family determinants equal 2^C(n,2).
pub fn verify_closed_forms(n_max: usize) -> Result<Vec<VerificationReport>> {
    let mut reports = Vec::new();
    let lt = Poly::one_plus_t();
    for n in 0..=n_max {
        reports.push(
            Check::new("hankel.closed_form_shift0").param("n", n).finish(
                det(&MatrixSpec::plain(SequenceKind::Large, 0, n))?,
                lt.pow(n * (n.max(1) - 1) / 2),
            ),
        );
        reports.push(
            Check::new("hankel.closed_form_shift1").param("n", n).finish(
                det(&MatrixSpec::plain(SequenceKind::Large, 1, n))?,
                lt.pow(n * (n + 1) / 2),
            ),
        );
        let two_pow = Poly::constant(BigInt::from(2).pow((n * (n.max(1) - 1) / 2) as u32));
        for shift in [0usize, 1] {
            let at_one = det(&MatrixSpec::plain(SequenceKind::Small, shift, n))?
                .eval(&BigInt::from(1));
            reports.push(
                Check::new("hankel.small_closed_form_t1")
                    .param("k", shift)
                    .param("n", n)
                    .finish(Poly::constant(at_one), two_pow.clone()),
            );
        }
    }
    Ok(reports)
}

/// Hankel-type matrices are symmetric, so the determinant must be invariant
/// under transposition; doubles as a construction sanity check.
pub fn verify_transpose_symmetry(k_max: usize, n_max: usize) -> Result<Vec<VerificationReport>> {
    let mut reports = Vec::new();
    for family in [SequenceKind::Large, SequenceKind::Small] {
        for k in 0..=k_max {
            for n in 0..=n_max {
                let m = build(&MatrixSpec::plain(family, k, n))?;
                reports.push(
                    Check::new("hankel.transpose_symmetry")
                        .param("family", if family == SequenceKind::Large { "H" } else { "G" })
                        .param("k", k)
                        .param("n", n)
                        .finish(m.transpose().determinant()?, m.determinant()?),
                );
            }
        }
    }
    Ok(reports)
}

pub fn verify_dodgson_grid(k_max: usize, n_max: usize) -> Result<Vec<VerificationReport>> {
    let mut reports = Vec::new();
    for family in [SequenceKind::Large, SequenceKind::Small] {
        for k in 0..=k_max {
            for n in 1..=n_max {
                reports.push(dodgson_check(family, k, n)?);
            }
        }
    }
    Ok(reports)
}

/// Combined determinant equals its deleted-matrix expansion on a grid of
/// integer (alpha, beta).
pub fn verify_combo_expansion_grid(
    k_max: usize,
    n_max: usize,
    range: std::ops::RangeInclusive<i64>,
) -> Result<Vec<VerificationReport>> {
    let mut reports = Vec::new();
    for family in [SequenceKind::Large, SequenceKind::Small] {
        for k in 0..=k_max {
            for n in 1..=n_max {
                for a in range.clone() {
                    for b in range.clone() {
                        let (alpha, beta) = (BigInt::from(a), BigInt::from(b));
                        let direct =
                            det(&MatrixSpec::combined(family, k, n, alpha.clone(), beta.clone()))?;
                        let expanded = det_combo_via_expansion(family, k, n, &alpha, &beta)?;
                        reports.push(
                            Check::new("hankel.combo_expansion")
                                .param("family", if family == SequenceKind::Large { "H" } else { "G" })
                                .param("k", k)
                                .param("n", n)
                                .param("alpha", a)
                                .param("beta", b)
                                .finish(direct, expanded),
                        );
                    }
                }
            }
        }
    }
    Ok(reports)
}
