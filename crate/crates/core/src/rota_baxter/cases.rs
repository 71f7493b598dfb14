//! Case analysis of Rota–Baxter operators on `I_n` and the structural
//! consequences checked on each operator.

use num_rational::BigRational;
use num_traits::Zero;
use serde::Serialize;

use super::{is_rb, require_i_n, RbOperator};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{forms, Matrix};
use crate::report::Check;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Case {
    /// `R = 0` or `R = -λE`.
    Trivial,
    /// `R(e_n)` has a nonzero `J_n` component.
    One,
    /// `R(e_n) ∈ Span{e_n}`.
    Two,
}

impl Case {
    pub fn label(self) -> &'static str {
        match self {
            Case::Trivial => "trivial",
            Case::One => "1",
            Case::Two => "2",
        }
    }
}

/// Evidence for the case of an operator. `holds` is false when the expected
/// structure is absent, which would contradict the classification.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CaseCertificate<E> {
    pub case: Case,
    /// Case 1: `S = A + (λ/2)E`.
    pub s: Option<Matrix<E>>,
    /// Case 1: `S² - (λ²/4)E`, zero when the certificate holds.
    pub s_squared_defect: Option<Matrix<E>>,
    /// Case 2: the entry `α_n` of `R(e_n)`.
    pub alpha_n: Option<E>,
    /// Case 2: whether `φ(R)` was used to reach `α_n = 0`.
    pub phi_normalized: bool,
    pub holds: bool,
    pub detail: String,
}

/// Sorts an RB operator on `I_n` into the trivial operators, case 1
/// (`v_n ≠ 0`, then `A = S - (λ/2)E` with `S` skew and `S² = (λ²/4)E`) or
/// case 2 (`v_n = 0`, then `α_n ∈ {0, -λ}` and, after `φ` when
/// `α_n = -λ`, `AᵀA = 0` and `A² + λA = 0`).
pub fn classify_case<F: Field>(a: &Algebra<F>, r: &RbOperator<F::Elem>) -> Result<CaseCertificate<F::Elem>> {
    require_rb(a, r)?;
    let f = a.field();
    let n = a.dim();
    let last = n - 1;
    let lam = &r.weight;
    let m = &r.matrix;
    if r.is_trivial(f) {
        return Ok(CaseCertificate {
            case: Case::Trivial,
            s: None,
            s_squared_defect: None,
            alpha_n: None,
            phi_normalized: false,
            holds: true,
            detail: "R is 0 or -λE".into(),
        });
    }
    let v_n_zero = (0..last).all(|k| f.is_zero(&m[(k, last)]));
    if !v_n_zero {
        let half = f.half()?;
        let half_lambda = f.mul(&half, lam);
        let s = m.add(f, &Matrix::scalar(f, n, &half_lambda));
        let target = Matrix::scalar(f, n, &f.mul(&half_lambda, &half_lambda));
        let defect = s.mul(f, &s).sub(f, &target);
        let skew = forms::skew_defect(f, &s);
        let holds = skew.is_none() && defect.is_zero(f);
        let detail = match skew {
            Some((i, j)) => format!("S = A + (λ/2)E is not skew at ({}, {})", i + 1, j + 1),
            None if !holds => "S² differs from (λ²/4)E".into(),
            None => "S = A + (λ/2)E is skew and S² = (λ²/4)E".into(),
        };
        return Ok(CaseCertificate {
            case: Case::One,
            s: Some(s),
            s_squared_defect: Some(defect),
            alpha_n: None,
            phi_normalized: false,
            holds,
            detail,
        });
    }
    let alpha_n = m[(last, last)].clone();
    let minus_lambda = f.neg(lam);
    let (normalized, phi_used) = if f.is_zero(&alpha_n) {
        (r.clone(), false)
    } else if alpha_n == minus_lambda {
        (r.phi(f), true)
    } else {
        return Ok(CaseCertificate {
            case: Case::Two,
            s: None,
            s_squared_defect: None,
            alpha_n: Some(alpha_n),
            phi_normalized: false,
            holds: false,
            detail: "v_n = 0 but α_n is neither 0 nor -λ".into(),
        });
    };
    let b = &normalized.matrix;
    let isotropic = b.transpose().mul(f, b).is_zero(f);
    let splitting = normalized.is_splitting(f);
    let holds = isotropic && splitting;
    let detail = match (isotropic, splitting) {
        (true, true) => "after normalization α_n = 0, AᵀA = 0 and A² + λA = 0".to_string(),
        (false, _) => "AᵀA ≠ 0 after normalization".to_string(),
        (true, false) => "A² + λA ≠ 0 after normalization".to_string(),
    };
    Ok(CaseCertificate {
        case: Case::Two,
        s: None,
        s_squared_defect: None,
        alpha_n: Some(alpha_n),
        phi_normalized: phi_used,
        holds,
        detail,
    })
}

fn require_rb<F: Field>(a: &Algebra<F>, r: &RbOperator<F::Elem>) -> Result<()> {
    require_i_n(a)?;
    let check = is_rb(a, r)?;
    if !check.holds {
        let detail = check.witness.map(|w| w.detail).unwrap_or_default();
        return Err(Error::NotRotaBaxter(detail));
    }
    Ok(())
}

/// `R² + λR = 0` together with isotropy of the columns, for `R` or its
/// `φ`-image `B = -A - λE`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct StructureCheck {
    pub r2_plus_lr_zero: bool,
    pub ata_zero: bool,
    pub phi_ata_zero: bool,
}

impl StructureCheck {
    pub fn holds(&self) -> bool {
        self.r2_plus_lr_zero && (self.ata_zero || self.phi_ata_zero)
    }
}

/// Checks that an RB operator on `I_n` is splitting and that `AᵀA = 0` or
/// `BᵀB = 0` for `B` the matrix of `φ(R)`. Both branches are reported; the
/// operator `-λE` needs the second.
pub fn rb_structure_check<F: Field>(a: &Algebra<F>, r: &RbOperator<F::Elem>) -> Result<StructureCheck> {
    require_rb(a, r)?;
    let f = a.field();
    let isotropic = |m: &Matrix<F::Elem>| m.transpose().mul(f, m).is_zero(f);
    Ok(StructureCheck {
        r2_plus_lr_zero: r.is_splitting(f),
        ata_zero: isotropic(&r.matrix),
        phi_ata_zero: isotropic(&r.phi(f).matrix),
    })
}

/// Over ℚ, `AᵀA = 0` forces `A = 0`: the `j`-th diagonal entry of `AᵀA` is
/// the sum of squares of column `j`. Fails only if some matrix had
/// `AᵀA = 0` with a nonzero column, reported as the witness.
pub fn totally_real_mechanism_check(a: &Matrix<BigRational>) -> Check {
    let q = crate::field::Rationals;
    let gram = a.transpose().mul(&q, a);
    if !gram.is_zero(&q) {
        return Check::pass();
    }
    for j in 0..a.ncols() {
        let col = a.column(j);
        let squares: BigRational = col.iter().map(|x| x * x).sum();
        debug_assert_eq!(squares, gram[(j, j)]);
        if let Some(i) = col.iter().position(|x| !x.is_zero()) {
            return Check::fail(
                &[i, j],
                format!("column {} is nonzero although its sum of squares vanishes", j + 1),
            );
        }
    }
    Check::pass()
}
