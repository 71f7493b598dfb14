//! Polynomial identities checked on basis tuples.

use std::fmt;
use std::str::FromStr;

use super::Algebra;
use crate::error::{Error, Result};
use crate::field::Field;
use crate::linalg::vector;
use crate::report::Check;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Identity {
    /// `(xy)z - x(yz) = (yx)z - y(xz)`
    PreLie,
    /// pre-Lie together with `(xy)z = (xz)y`
    Novikov,
    /// `(xy)x = x(yx)`
    Flexible,
    /// `xy = yx`
    Commutative,
    /// `xy = -yx`
    Anticommutative,
    /// `x(yz) + y(zx) + z(xy) = 0`
    Jacobi,
    /// `(xy)z = x(yz)`
    Associative,
    /// `(xx)x = x(xx)`
    ThirdPowerAssociative,
}

impl Identity {
    pub const ALL: [Identity; 8] = [
        Identity::PreLie,
        Identity::Novikov,
        Identity::Flexible,
        Identity::Commutative,
        Identity::Anticommutative,
        Identity::Jacobi,
        Identity::Associative,
        Identity::ThirdPowerAssociative,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::PreLie => "pre_lie",
            Identity::Novikov => "novikov",
            Identity::Flexible => "flexible",
            Identity::Commutative => "commutative",
            Identity::Anticommutative => "anticommutative",
            Identity::Jacobi => "jacobi",
            Identity::Associative => "associative",
            Identity::ThirdPowerAssociative => "third_power_associative",
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let key = s.to_ascii_lowercase().replace('-', "_");
        Identity::ALL
            .into_iter()
            .find(|k| k.name() == key)
            .or(match key.as_str() {
                "left_symmetric" | "prelie" => Some(Identity::PreLie),
                "power_associative" | "third_power" => Some(Identity::ThirdPowerAssociative),
                "lie" => Some(Identity::Jacobi),
                _ => None,
            })
            .ok_or_else(|| Error::InvalidArgument(format!("unknown identity `{s}`")))
    }
}

/// `(e_i e_j) e_k`
fn left_assoc<F: Field>(a: &Algebra<F>, i: usize, j: usize, k: usize) -> Vec<F::Elem> {
    a.right_basis_mul(a.product(i, j), k)
}

/// `e_i (e_j e_k)`
fn right_assoc<F: Field>(a: &Algebra<F>, i: usize, j: usize, k: usize) -> Vec<F::Elem> {
    a.left_basis_mul(i, a.product(j, k))
}

/// Associator `(e_i e_j) e_k - e_i (e_j e_k)`.
pub fn associator<F: Field>(a: &Algebra<F>, i: usize, j: usize, k: usize) -> Vec<F::Elem> {
    vector::sub(a.field(), &left_assoc(a, i, j, k), &right_assoc(a, i, j, k))
}

fn first_failure<F: Field>(
    a: &Algebra<F>,
    arity: usize,
    mut value: impl FnMut(&[usize]) -> Vec<F::Elem>,
    label: &str,
) -> Check {
    let n = a.dim();
    let f = a.field();
    let mut idx = vec![0; arity];
    loop {
        let v = value(&idx);
        if !vector::is_zero(f, &v) {
            let shown: Vec<String> = idx.iter().map(|i| format!("e_{}", i + 1)).collect();
            return Check::fail(
                &idx,
                format!("{label} fails at ({}): residual {:?}", shown.join(", "), vector::format(f, &v)),
            );
        }
        let mut pos = arity;
        loop {
            if pos == 0 {
                return Check::pass();
            }
            pos -= 1;
            idx[pos] += 1;
            if idx[pos] < n {
                break;
            }
            idx[pos] = 0;
        }
    }
}

/// Coefficient of `t_a t_b t_c` (`a <= b <= c`) in `(xx)x - x(xx)` for
/// `x = Σ t_i e_i`.
pub fn third_power_coefficient<F: Field>(alg: &Algebra<F>, a: usize, b: usize, c: usize) -> Vec<F::Elem> {
    let f = alg.field();
    let mut perms = vec![[a, b, c], [a, c, b], [b, a, c], [b, c, a], [c, a, b], [c, b, a]];
    perms.sort();
    perms.dedup();
    let mut out = alg.zero_vector();
    for [i, j, k] in perms {
        out = vector::add(f, &out, &associator(alg, i, j, k));
    }
    out
}

/// Checks `kind` on all basis tuples. Multilinear identities are decided
/// exactly this way; for [`Identity::ThirdPowerAssociative`] the
/// coefficients of the cubic polynomial in the coordinates are compared to
/// zero, which decides the identity over infinite fields (see
/// [`third_power_associative_exhaustive`] for finite ones).
pub fn check_identity<F: Field>(a: &Algebra<F>, kind: Identity) -> Check {
    let f = a.field();
    match kind {
        Identity::PreLie => first_failure(a, 3, |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            vector::sub(f, &associator(a, x, y, z), &associator(a, y, x, z))
        }, "pre-Lie identity"),
        Identity::Novikov => check_identity(a, Identity::PreLie).and_then(|| {
            first_failure(a, 3, |t| {
                vector::sub(f, &left_assoc(a, t[0], t[1], t[2]), &left_assoc(a, t[0], t[2], t[1]))
            }, "right commutativity (xy)z = (xz)y")
        }),
        Identity::Flexible => first_failure(a, 3, |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            if x == z {
                associator(a, x, y, x)
            } else {
                vector::add(f, &associator(a, x, y, z), &associator(a, z, y, x))
            }
        }, "flexibility"),
        Identity::Commutative => first_failure(a, 2, |t| {
            vector::sub(f, a.product(t[0], t[1]), a.product(t[1], t[0]))
        }, "commutativity"),
        Identity::Anticommutative => first_failure(a, 2, |t| {
            vector::add(f, a.product(t[0], t[1]), a.product(t[1], t[0]))
        }, "anticommutativity"),
        Identity::Jacobi => first_failure(a, 3, |t| {
            let (x, y, z) = (t[0], t[1], t[2]);
            let s = vector::add(f, &right_assoc(a, x, y, z), &right_assoc(a, y, z, x));
            vector::add(f, &s, &right_assoc(a, z, x, y))
        }, "Jacobi identity"),
        Identity::Associative => first_failure(a, 3, |t| associator(a, t[0], t[1], t[2]), "associativity"),
        Identity::ThirdPowerAssociative => {
            let n = a.dim();
            for i in 0..n {
                for j in i..n {
                    for k in j..n {
                        let v = third_power_coefficient(a, i, j, k);
                        if !vector::is_zero(f, &v) {
                            return Check::fail(
                                &[i, j, k],
                                format!(
                                    "(xx)x - x(xx) has coefficient {:?} at t_{}t_{}t_{}",
                                    vector::format(f, &v),
                                    i + 1,
                                    j + 1,
                                    k + 1
                                ),
                            );
                        }
                    }
                }
            }
            Check::pass()
        }
    }
}

/// `(xx)x = x(xx)` for every vector `x` of a finite algebra. The witness
/// lists the coordinates of the first failing `x` in its detail.
pub fn third_power_associative_exhaustive<F: Field>(a: &Algebra<F>, cap: u64) -> Result<Check> {
    let f = a.field();
    for x in crate::finite::vectors(f, a.dim(), cap)? {
        let xx = a.multiply(&x, &x);
        let d = vector::sub(f, &a.multiply(&xx, &x), &a.multiply(&x, &xx));
        if !vector::is_zero(f, &d) {
            let support: Vec<usize> = (0..x.len()).filter(|&i| !f.is_zero(&x[i])).collect();
            return Ok(Check::fail(
                &support,
                format!("x = {:?}: (xx)x - x(xx) = {:?}", vector::format(f, &x), vector::format(f, &d)),
            ));
        }
    }
    Ok(Check::pass())
}

/// `(x²)(x²) - ((x²)x)x`; nonzero means the fourth power of `x` depends on
/// the bracketing.
pub fn fourth_power_defect<F: Field>(a: &Algebra<F>, x: &[F::Elem]) -> Vec<F::Elem> {
    let x2 = a.multiply(x, x);
    let left = a.multiply(&x2, &x2);
    let right = a.multiply(&a.multiply(&x2, x), x);
    vector::sub(a.field(), &left, &right)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::builders::*;
    use crate::field::{PrimeField, Rationals};

    #[test]
    fn i_n_is_pre_lie_not_novikov() {
        let q = Rationals;
        for n in 1..=6 {
            let a = i_n(&q, n).unwrap();
            assert!(check_identity(&a, Identity::PreLie).holds, "n = {n}");
        }
        assert!(check_identity(&i_n(&q, 1).unwrap(), Identity::Novikov).holds);
        assert!(!check_identity(&i_n(&q, 2).unwrap(), Identity::Novikov).holds);
    }

    #[test]
    fn i2_is_not_third_power_associative() {
        let q = Rationals;
        let a = i_n(&q, 2).unwrap();
        let c = check_identity(&a, Identity::ThirdPowerAssociative);
        assert!(!c.holds);
        assert_eq!(c.witness.unwrap().basis, vec![1, 1, 1]);
        // (e_1 e_1) e_1 = e_1, e_1 (e_1 e_1) = 0
        assert_eq!(associator(&a, 0, 0, 0), a.unit(0));
        let f = PrimeField::new(5).unwrap();
        let ex = third_power_associative_exhaustive(&i_n(&f, 2).unwrap(), 1000).unwrap();
        assert!(!ex.holds);
    }

    #[test]
    fn plus_algebra_identities() {
        let q = Rationals;
        let p = plus_algebra(&i_n(&q, 3).unwrap()).unwrap();
        assert!(check_identity(&p, Identity::Commutative).holds);
        assert!(check_identity(&p, Identity::Flexible).holds);
        // commutativity alone forces (xx)x = x(xx); fourth powers differ
        assert!(check_identity(&p, Identity::ThirdPowerAssociative).holds);
        assert!(!vector::is_zero(&q, &fourth_power_defect(&p, &p.unit(0))));
    }

    #[test]
    fn lie_admissible() {
        let q = Rationals;
        for n in 2..=4 {
            let m = minus_algebra(&i_n(&q, n).unwrap());
            assert!(check_identity(&m, Identity::Jacobi).holds);
            assert!(check_identity(&m, Identity::Anticommutative).holds);
        }
    }

    #[test]
    fn other_families_are_pre_lie() {
        let q = Rationals;
        let a = dot_product_algebra(&q, 3, &[q.one(), q.one(), q.zero()]).unwrap();
        assert!(check_identity(&a, Identity::PreLie).holds);
        for n in 2..=3 {
            let (u, _) = upper_triangular_circ(&q, n).unwrap();
            assert!(check_identity(&u, Identity::PreLie).holds);
        }
        let f = PrimeField::new(5).unwrap();
        assert!(check_identity(&i_infinity_truncation(&f, 3), Identity::PreLie).holds);
        assert!(check_identity(&unital_extension(&i_n(&q, 2).unwrap()), Identity::PreLie).holds);
    }

    #[test]
    fn associative_algebras_pass_everything_associative() {
        // the field itself, e_1 e_1 = e_1
        let q = Rationals;
        let a = Algebra::from_table(q, 1, [(1, 1, 1, q.one())]).unwrap();
        for kind in [Identity::Associative, Identity::Novikov, Identity::ThirdPowerAssociative, Identity::Flexible] {
            assert!(check_identity(&a, kind).holds, "{kind}");
        }
    }

    #[test]
    fn names_round_trip() {
        for k in Identity::ALL {
            assert_eq!(k.name().parse::<Identity>().unwrap(), k);
        }
        assert!("nope".parse::<Identity>().is_err());
    }
}
