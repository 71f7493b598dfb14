//! Direct-sum decompositions into two subalgebras and the splitting
//! operators `P(a_1 + a_2) = -λa_2` they define.

use rayon::prelude::*;
use serde::Serialize;

use super::{require_i_n, RbOperator};
use crate::algebra::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::finite::{subspaces, SearchConfig};
use crate::linalg::{forms, inverse, vector, Matrix, Subspace};

/// `A = A1 ⊕ A2` as vector spaces with both parts subalgebras.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Decomposition<E> {
    pub a1: Subspace<E>,
    pub a2: Subspace<E>,
}

impl<E: Clone + Eq> Decomposition<E> {
    /// Verifies both parts are subalgebras and that they form a direct sum.
    pub fn new<F: Field<Elem = E>>(a: &Algebra<F>, a1: Subspace<E>, a2: Subspace<E>) -> Result<Self> {
        let f = a.field();
        let n = a.dim();
        if a1.ambient_dim() != n || a2.ambient_dim() != n {
            return Err(Error::DimensionMismatch("parts must live in the algebra's space".into()));
        }
        for (name, part) in [("A1", &a1), ("A2", &a2)] {
            let check = a.is_subalgebra(part);
            if !check.holds {
                let detail = check.witness.map(|w| w.detail).unwrap_or_default();
                return Err(Error::InvalidDecomposition(format!("{name} is not a subalgebra: {detail}")));
            }
        }
        if a1.dim() + a2.dim() != n {
            return Err(Error::InvalidDecomposition(format!(
                "dim A1 + dim A2 = {} + {} but the algebra has dimension {n}",
                a1.dim(),
                a2.dim()
            )));
        }
        let meet = a1.intersect(f, &a2)?;
        if !meet.is_zero() {
            return Err(Error::InvalidDecomposition(format!(
                "A1 ∩ A2 has dimension {}",
                meet.dim()
            )));
        }
        Ok(Self { a1, a2 })
    }

    /// `ker R ⊕ ker(R + λE)` for a splitting operator of nonzero weight.
    pub fn from_operator<F: Field<Elem = E>>(a: &Algebra<F>, r: &RbOperator<E>) -> Result<Self> {
        let f = a.field();
        if f.is_zero(&r.weight) {
            return Err(Error::InvalidArgument("weight 0 operators do not split the algebra".into()));
        }
        Self::new(a, r.kernel(f), r.shifted_kernel(f))
    }

    pub fn is_trivial(&self) -> bool {
        self.a1.is_zero() || self.a2.is_zero()
    }
}

/// `P = -λ·(projection onto A2 along A1)`.
pub fn splitting_from_decomposition<F: Field>(
    a: &Algebra<F>,
    d: &Decomposition<F::Elem>,
    weight: &F::Elem,
) -> Result<RbOperator<F::Elem>> {
    let d = Decomposition::new(a, d.a1.clone(), d.a2.clone())?;
    let f = a.field();
    let n = a.dim();
    let mut cols = d.a1.basis_vectors();
    cols.extend(d.a2.basis_vectors());
    let basis = Matrix::from_columns(n, &cols);
    let inv = inverse(f, &basis).expect("direct sum gives a basis");
    let mut diag = Matrix::zeros(f, n, n);
    for k in d.a1.dim()..n {
        diag[(k, k)] = f.neg(weight);
    }
    RbOperator::new(basis.mul(f, &diag).mul(f, &inv), weight.clone())
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum NormalForm {
    /// One part is zero.
    Trivial,
    /// `e_n` lies in one part; the other part (1 or 2) is Lagrangian.
    WithEn { lagrangian_part: u8 },
    /// `e_n` lies in neither part; both are Lagrangian.
    BothLagrangian,
}

/// Shape of a decomposition of `I_n`. Every part not containing `e_n` must
/// be Lagrangian for the extended form; `holds` records that.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NormalFormCertificate<E> {
    pub form: NormalForm,
    pub holds: bool,
    /// For [`NormalForm::WithEn`]: the Lagrangian part `W` and
    /// `U = (other part) ∩ J_n`, so the other part is `U ⊕ Span{e_n}`.
    pub w: Option<Subspace<E>>,
    pub u: Option<Subspace<E>>,
}

impl<E: Clone + Eq> Decomposition<E> {
    pub fn normal_form<F: Field<Elem = E>>(&self, a: &Algebra<F>) -> Result<NormalFormCertificate<E>> {
        require_i_n(a)?;
        let f = a.field();
        let n = a.dim();
        if self.is_trivial() {
            return Ok(NormalFormCertificate {
                form: NormalForm::Trivial,
                holds: true,
                w: None,
                u: None,
            });
        }
        let en = vector::unit(f, n, n - 1);
        let j_n = Subspace::span(f, n, &(0..n - 1).map(|i| vector::unit(f, n, i)).collect::<Vec<_>>());
        let parts = [&self.a1, &self.a2];
        let with_en: Vec<bool> = parts.iter().map(|p| p.contains(f, &en)).collect();
        let lagrangian: Vec<bool> = parts.iter().map(|p| forms::is_lagrangian(f, p)).collect();
        let holds = (0..2).all(|k| with_en[k] || lagrangian[k]);
        Ok(match with_en.iter().position(|&b| b) {
            Some(k) => {
                let other = 1 - k;
                NormalFormCertificate {
                    form: NormalForm::WithEn {
                        lagrangian_part: other as u8 + 1,
                    },
                    holds,
                    w: Some(parts[other].clone()),
                    u: Some(parts[k].intersect(f, &j_n)?),
                }
            }
            None => NormalFormCertificate {
                form: NormalForm::BothLagrangian,
                holds,
                w: None,
                u: None,
            },
        })
    }
}

/// Every ordered decomposition `(A1, A2)` of a finite-field algebra into two
/// subalgebras, sorted.
pub fn decompositions_finite<F: Field>(a: &Algebra<F>, config: &SearchConfig) -> Result<Vec<Decomposition<F::Elem>>> {
    let f = a.field();
    let n = a.dim();
    let all = subspaces(f, n, config.cap)?;
    let subalgebras: Vec<_> = all.into_iter().filter(|s| a.is_subalgebra(s).holds).collect();
    let mut out = config.run(|| {
        subalgebras
            .par_iter()
            .flat_map_iter(|a1| {
                subalgebras
                    .iter()
                    .filter(move |a2| a1.dim() + a2.dim() == n)
                    .filter(move |a2| a1.intersect(f, a2).map(|m| m.is_zero()).unwrap_or(false))
                    .map(move |a2| Decomposition {
                        a1: a1.clone(),
                        a2: a2.clone(),
                    })
            })
            .collect::<Vec<_>>()
    })?;
    out.sort();
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builders::i_n;
    use crate::field::PrimeField;
    use crate::rota_baxter::is_rb;

    fn line(f: &PrimeField, v: Vec<u64>) -> Subspace<u64> {
        Subspace::span(f, v.len(), &[v])
    }

    #[test]
    fn isotropic_lines_in_gf5() {
        let f = PrimeField::new(5).unwrap();
        let a = i_n(&f, 2).unwrap();
        for t in [2, 3] {
            let d = Decomposition::new(&a, line(&f, vec![1, t]), line(&f, vec![0, 1])).unwrap();
            let p = splitting_from_decomposition(&a, &d, &1).unwrap();
            assert!(is_rb(&a, &p).unwrap().holds);
            assert!(p.is_splitting(&f));
            let nf = d.normal_form(&a).unwrap();
            assert!(nf.holds);
            assert_eq!(nf.form, NormalForm::WithEn { lagrangian_part: 1 });
            assert_eq!(Decomposition::from_operator(&a, &p).unwrap(), d);
        }
        // the two isotropic lines together
        let d = Decomposition::new(&a, line(&f, vec![1, 2]), line(&f, vec![1, 3])).unwrap();
        let nf = d.normal_form(&a).unwrap();
        assert_eq!(nf.form, NormalForm::BothLagrangian);
        assert!(nf.holds);
        let p = splitting_from_decomposition(&a, &d, &1).unwrap();
        assert!(is_rb(&a, &p).unwrap().holds);
    }

    #[test]
    fn rejections() {
        let f = PrimeField::new(5).unwrap();
        let a = i_n(&f, 2).unwrap();
        let e1 = line(&f, vec![1, 0]);
        let e2 = line(&f, vec![0, 1]);
        assert!(matches!(Decomposition::new(&a, e1, e2.clone()), Err(Error::InvalidDecomposition(_))));
        assert!(Decomposition::new(&a, e2.clone(), e2).is_err());
        let whole = Decomposition::new(&a, Subspace::full(&f, 2), Subspace::zero(2)).unwrap();
        assert!(splitting_from_decomposition(&a, &whole, &1).unwrap().matrix.is_zero(&f));
    }

    #[test]
    fn enumerated_decompositions() {
        let config = SearchConfig::default();
        let f5 = PrimeField::new(5).unwrap();
        let all = decompositions_finite(&i_n(&f5, 2).unwrap(), &config).unwrap();
        // (whole, 0), (0, whole), and the ordered pairs among e_2, e_1 ± 2e_2
        assert_eq!(all.len(), 2 + 6);
        let f3 = PrimeField::new(3).unwrap();
        let all = decompositions_finite(&i_n(&f3, 2).unwrap(), &config).unwrap();
        assert!(all.iter().all(|d| d.is_trivial()));
        for n in 2..=3 {
            let a = i_n(&f5, n).unwrap();
            for d in decompositions_finite(&a, &config).unwrap() {
                assert!(d.normal_form(&a).unwrap().holds);
            }
        }
    }
}
