//! Explicit operators and decompositions on `I_n` that need square roots in
//! the ground field.

use super::{Decomposition, RbOperator};
use crate::algebra::builders::i_n;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::{vector, Matrix, Subspace};

fn root<F: Field>(f: &F, square: i64, equation: &str) -> Result<F::Elem> {
    f.sqrt(&f.from_i64(square)).ok_or_else(|| Error::MissingRoot {
        field: f.name(),
        equation: equation.to_string(),
    })
}

/// Weight-0 operator on `I_n`, `n ≥ 3`:
/// `R(e_1) = e_n + c·(e_2 + ... + e_{n-1})` with `c = 1/sqrt(2 - n)`, all
/// other basis vectors mapped to 0.
pub fn isotropic_column_operator<F: Field>(f: &F, n: usize) -> Result<RbOperator<F::Elem>> {
    if n < 3 {
        return Err(Error::InvalidArgument("needs n >= 3".into()));
    }
    let s = root(f, 2 - n as i64, &format!("x^2 = {}", 2 - n as i64))?;
    let c = f.inv(&s).expect("nonzero root");
    let mut m = Matrix::zeros(f, n, n);
    m[(n - 1, 0)] = f.one();
    for k in 1..n - 1 {
        m[(k, 0)] = c.clone();
    }
    RbOperator::new(m, f.zero())
}

/// Weight-0 skew-symmetric operator on `I_4` with `i² = -1`:
/// `R(e_1) = -ie_3 - e_4`, `R(e_2) = e_3 - ie_4`, `R(e_3) = ie_1 - e_2`,
/// `R(e_4) = e_1 + ie_2`.
pub fn skew_operator_i4<F: Field>(f: &F) -> Result<RbOperator<F::Elem>> {
    let i = root(f, -1, "x^2 = -1")?;
    let z = f.zero();
    let one = f.one();
    let neg = |x: &F::Elem| f.neg(x);
    let columns = vec![
        vec![z.clone(), z.clone(), neg(&i), neg(&one)],
        vec![z.clone(), z.clone(), one.clone(), neg(&i)],
        vec![i.clone(), neg(&one), z.clone(), z.clone()],
        vec![one.clone(), i.clone(), z.clone(), z],
    ];
    RbOperator::new(Matrix::from_columns(4, &columns), f.zero())
}

/// `I_2 = Span{e_1 + sign·i·e_2} ⊕ Span{e_2}` with `i² = -1`; `sign` is
/// `+1` or `-1`.
pub fn isotropic_line_decomposition<F: Field>(f: &F, sign: i64) -> Result<Decomposition<F::Elem>> {
    if sign != 1 && sign != -1 {
        return Err(Error::InvalidArgument("sign must be +1 or -1".into()));
    }
    let i = root(f, -1, "x^2 = -1")?;
    let a = i_n(f, 2)?;
    let w = Subspace::span(f, 2, &[vec![f.one(), f.mul(&f.from_i64(sign), &i)]]);
    let u = Subspace::span(f, 2, &[vector::unit(f, 2, 1)]);
    Decomposition::new(&a, w, u)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Quadratic, Rationals};
    use crate::linalg::forms;
    use crate::rota_baxter::{classify_case, is_rb, splitting_from_decomposition, Case};

    #[test]
    fn column_operator() {
        let f = PrimeField::new(5).unwrap();
        let r = isotropic_column_operator(&f, 3).unwrap();
        // sqrt(-1) = 2 in GF(5), so c = 1/2 = 3
        assert_eq!(r.matrix.column(0), vec![0, 3, 1]);
        let a = i_n(&f, 3).unwrap();
        assert!(is_rb(&a, &r).unwrap().holds);
        assert_eq!(classify_case(&a, &r).unwrap().case, Case::Two);
        let qi = Quadratic::new(Rationals, Rationals.from_i64(-1)).unwrap();
        let r = isotropic_column_operator(&qi, 3).unwrap();
        assert!(is_rb(&i_n(&qi, 3).unwrap(), &r).unwrap().holds);
        assert!(matches!(isotropic_column_operator(&Rationals, 3), Err(Error::MissingRoot { .. })));
        assert!(isotropic_column_operator(&f, 2).is_err());
    }

    #[test]
    fn skew_operator() {
        let qi = Quadratic::new(Rationals, Rationals.from_i64(-1)).unwrap();
        let r = skew_operator_i4(&qi).unwrap();
        assert!(forms::is_skew_symmetric(&qi, &r.matrix));
        let a = i_n(&qi, 4).unwrap();
        assert!(is_rb(&a, &r).unwrap().holds);
        let c = classify_case(&a, &r).unwrap();
        assert_eq!(c.case, Case::One);
        assert_eq!(c.s.unwrap(), r.matrix);
        assert!(c.s_squared_defect.unwrap().is_zero(&qi));
        assert!(r.is_splitting(&qi));
    }

    #[test]
    fn line_decompositions() {
        let qi = Quadratic::new(Rationals, Rationals.from_i64(-1)).unwrap();
        let a = i_n(&qi, 2).unwrap();
        let plus = isotropic_line_decomposition(&qi, 1).unwrap();
        let minus = isotropic_line_decomposition(&qi, -1).unwrap();
        assert_ne!(plus, minus);
        for d in [&plus, &minus] {
            assert!(forms::is_lagrangian(&qi, &d.a1));
            for w in [1, -1, 3] {
                let p = splitting_from_decomposition(&a, d, &qi.from_i64(w)).unwrap();
                assert!(is_rb(&a, &p).unwrap().holds);
                assert!(!p.is_trivial(&qi));
            }
        }
        assert!(isotropic_line_decomposition(&PrimeField::new(3).unwrap(), 1).is_err());
        assert!(isotropic_line_decomposition(&PrimeField::new(5).unwrap(), -1).is_ok());
    }
}
