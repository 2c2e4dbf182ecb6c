//! Unramified local L- and γ-factors of Schur functors.
//!
//! An unramified parameter is a semisimple class, given by its eigenvalues,
//! together with the residue cardinality `q`. For `r = S_ν` the factor is
//! `L(s, r) = det(I − r(t) q^{−s})^{−1}`; its reciprocal is a polynomial in
//! `t = q^{−s}` whose inverse roots are the monomials `x^{content(T)}` over
//! semistandard tableaux `T` of shape `ν`.

use num_bigint::BigInt;
use num_complex::{Complex, Complex64};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::partition::{ssyt_weights, Partition};
use crate::poly::{Poly, RationalFunction};
use crate::rep_ring::decompose_sum;
use crate::scalar::{from_int, to_complex64, Scalar, ScalarRepr};

/// Eigenvalues of a semisimple class (Satake or Frobenius) and the residue
/// cardinality `q`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(try_from = "ParameterRepr", into = "ParameterRepr")]
pub struct UnramifiedParameter {
    eigenvalues: Vec<Scalar>,
    q: u64,
}

#[derive(Serialize, Deserialize)]
struct ParameterRepr {
    eigenvalues: Vec<ScalarRepr>,
    q: u64,
}

impl From<UnramifiedParameter> for ParameterRepr {
    fn from(p: UnramifiedParameter) -> Self {
        ParameterRepr { eigenvalues: p.eigenvalues.iter().map(ScalarRepr::from).collect(), q: p.q }
    }
}

impl TryFrom<ParameterRepr> for UnramifiedParameter {
    type Error = Error;
    fn try_from(r: ParameterRepr) -> Result<Self> {
        let eigenvalues = r
            .eigenvalues
            .into_iter()
            .map(Scalar::try_from)
            .collect::<Result<Vec<_>>>()?;
        UnramifiedParameter::new(eigenvalues, r.q)
    }
}

fn is_prime_power(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut p = 2;
    while p * p <= q {
        if q % p == 0 {
            let mut r = q;
            while r % p == 0 {
                r /= p;
            }
            return r == 1;
        }
        p += 1;
    }
    true
}

impl UnramifiedParameter {
    pub fn new(eigenvalues: Vec<Scalar>, q: u64) -> Result<Self> {
        if eigenvalues.iter().any(Zero::is_zero) {
            return Err(Error::InvalidParameter("eigenvalues must be nonzero".into()));
        }
        if !is_prime_power(q) {
            return Err(Error::InvalidParameter(format!("q = {q} is not a prime power")));
        }
        Ok(UnramifiedParameter { eigenvalues, q })
    }

    pub fn eigenvalues(&self) -> &[Scalar] {
        &self.eigenvalues
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    pub fn rank(&self) -> usize {
        self.eigenvalues.len()
    }

    /// The contragredient: inverted eigenvalues.
    pub fn dual(&self) -> Self {
        UnramifiedParameter {
            eigenvalues: self.eigenvalues.iter().map(|x| Scalar::one() / x.clone()).collect(),
            q: self.q,
        }
    }

    /// Parameter of `ρ_1 ⊕ ρ_2`.
    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.q != other.q {
            return Err(Error::QMismatch(self.q, other.q));
        }
        let mut eigenvalues = self.eigenvalues.clone();
        eigenvalues.extend(other.eigenvalues.iter().cloned());
        Ok(UnramifiedParameter { eigenvalues, q: self.q })
    }

    /// Eigenvalues of `S_ν` applied to this class, one per SSYT of shape `ν`.
    pub fn schur_weights(&self, nu: &Partition) -> Vec<Scalar> {
        ssyt_weights(nu, self.rank())
            .into_iter()
            .map(|content| monomial(&self.eigenvalues, &content))
            .collect()
    }
}

fn monomial(x: &[Scalar], exps: &[u32]) -> Scalar {
    x.iter()
        .zip(exps)
        .fold(Scalar::one(), |acc, (b, &e)| acc * num_traits::pow(b.clone(), e as usize))
}

/// `coeffs / den` with Gaussian-integer coefficients. Expanding `Π (1 − w t)`
/// this way avoids a gcd after every rational operation.
struct ClearedPoly {
    coeffs: Vec<Complex<BigInt>>,
    den: BigInt,
}

impl ClearedPoly {
    fn one() -> Self {
        ClearedPoly { coeffs: vec![Complex::one()], den: BigInt::one() }
    }

    /// `Π (1 − w t)`, each factor written as `(d − d·w t)/d`.
    fn from_weights(ws: &[Scalar]) -> Self {
        let mut out = ClearedPoly::one();
        for w in ws {
            let d = w.re.denom().lcm(w.im.denom());
            let a = Complex::new(w.re.numer() * (&d / w.re.denom()), w.im.numer() * (&d / w.im.denom()));
            let dc = Complex::new(d.clone(), BigInt::zero());
            out.coeffs.push(Complex::zero());
            for k in (1..out.coeffs.len()).rev() {
                out.coeffs[k] = &out.coeffs[k] * &dc - &out.coeffs[k - 1] * &a;
            }
            out.coeffs[0] = &out.coeffs[0] * &dc;
            out.den *= d;
        }
        out
    }

    fn mul(&self, other: &Self) -> Self {
        let mut coeffs = vec![Complex::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        ClearedPoly { coeffs, den: &self.den * &other.den }
    }

    fn to_poly(&self) -> Poly<Scalar> {
        let frac = |x: &BigInt| BigRational::new(x.clone(), self.den.clone());
        Poly::new(self.coeffs.iter().map(|c| Complex::new(frac(&c.re), frac(&c.im))).collect())
    }
}

/// `L(s) = 1 / reciprocal(t)` with `t = q^{−s}`.
#[derive(Debug, Clone, PartialEq)]
pub struct LocalLFactor {
    pub reciprocal: Poly<Scalar>,
}

impl LocalLFactor {
    pub fn from_weights(weights: &[Scalar]) -> Self {
        LocalLFactor { reciprocal: ClearedPoly::from_weights(weights).to_poly() }
    }

    pub fn degree(&self) -> usize {
        self.reciprocal.degree().unwrap_or(0)
    }

    pub fn product(&self, other: &Self) -> Self {
        LocalLFactor { reciprocal: &self.reciprocal * &other.reciprocal }
    }
}

pub fn local_l_factor(p: &UnramifiedParameter, nu: &Partition) -> LocalLFactor {
    LocalLFactor::from_weights(&p.schur_weights(nu))
}

/// `γ(s) = L(1−s, dual) / L(s)`, held as the two reciprocal polynomials.
///
/// `numerator` is the reciprocal of `L(s)` in `t`. `denominator` is the
/// reciprocal of `L(1−s, dual)` in `u = 1/t`: under `s ↦ 1−s` the variable `t`
/// becomes `q^{−1} t^{−1}`, so each dual factor `1 − w^{−1} q^{−1} u` is a
/// polynomial in `u` of the same degree.
#[derive(Debug, Clone, PartialEq)]
pub struct GammaFactor {
    pub q: u64,
    pub numerator: Poly<Scalar>,
    pub denominator: Poly<Scalar>,
}

impl GammaFactor {
    /// `γ` as a reduced rational function of `t`.
    pub fn value(&self) -> RationalFunction<Scalar> {
        // D(1/t) = t^{-d} · reversed(D)
        let d = self.denominator.degree().unwrap_or(0);
        let num = self.numerator.shift(d);
        let den = self.denominator.reversed();
        // reversed() drops a vanishing top coefficient, which would be a zero
        // constant term of D; D(0) = 1 so the degree is preserved
        RationalFunction::new(num, den)
    }

    /// `γ(1−s)` for the dual parameter, expressed in `t' = q^{−(1−s)}`.
    ///
    /// Only the rescaling `t' = u / q` is needed: the new `L(s)`-reciprocal is
    /// the old denominator evaluated at `u = q t'`, and the new denominator is
    /// the old numerator evaluated at `t = u' / q`.
    pub fn dual_substitute(&self) -> GammaFactor {
        let q = from_int(self.q as i64);
        let qinv = Scalar::one() / q.clone();
        GammaFactor {
            q: self.q,
            numerator: self.denominator.rescale_var(&q),
            denominator: self.numerator.rescale_var(&qinv),
        }
    }
}

pub fn gamma_unramified(p: &UnramifiedParameter, nu: &Partition) -> GammaFactor {
    let numerator = local_l_factor(p, nu).reciprocal;
    let qinv = Scalar::one() / from_int(p.q as i64);
    let dual_weights: Vec<Scalar> = p
        .dual()
        .schur_weights(nu)
        .into_iter()
        .map(|w| w * qinv.clone())
        .collect();
    GammaFactor { q: p.q, numerator, denominator: Poly::from_inverse_roots(&dual_weights) }
}

/// Checks `L(S_ν(ρ_1 ⊕ ρ_2)) = Π_{(λ,μ)} L(S_λ ρ_1 ⊗ S_μ ρ_2)^{N_{λμν}}` as an
/// exact polynomial identity.
pub fn additivity_check(p1: &UnramifiedParameter, p2: &UnramifiedParameter, nu: &Partition) -> Result<bool> {
    let sum = p1.direct_sum(p2)?;
    let lhs = local_l_factor(&sum, nu);
    let mut rhs = ClearedPoly::one();
    for (factors, mult) in decompose_sum(nu, 2).terms() {
        let w1 = p1.schur_weights(&factors[0]);
        let w2 = p2.schur_weights(&factors[1]);
        let weights: Vec<Scalar> = w1
            .iter()
            .flat_map(|a| w2.iter().map(move |b| a.clone() * b.clone()))
            .collect();
        let term = ClearedPoly::from_weights(&weights);
        for _ in 0..mult {
            rhs = rhs.mul(&term);
        }
    }
    Ok(lhs.reciprocal == rhs.to_poly())
}

/// Checks `L(ρ⊗ρ) = L(Λ²ρ) · L(Sym²ρ)`.
pub fn tensor_square_split(p: &UnramifiedParameter) -> bool {
    let x = p.eigenvalues();
    let pairs: Vec<Scalar> = x
        .iter()
        .flat_map(|a| x.iter().map(move |b| a.clone() * b.clone()))
        .collect();
    let lhs = LocalLFactor::from_weights(&pairs);
    let rhs = local_l_factor(p, &Partition::column(2)).product(&local_l_factor(p, &Partition::row(2)));
    lhs == rhs
}

/// `Π_v L(s, π_v, r)` over a finite list of places, in floating point.
///
/// Each Euler factor is evaluated as `Π_w 1/(1 − w q^{−s})`; places and weights
/// are multiplied in list order. Fails if some `|w| q^{−Re s} ≥ 1`.
pub fn partial_product(places: &[(UnramifiedParameter, Partition)], s: Complex64) -> Result<Complex64> {
    let mut total = Complex64::one();
    for (p, nu) in places {
        let q = p.q as f64;
        let t = (-s * q.ln()).exp();
        let scale = q.powf(-s.re);
        for w in p.schur_weights(nu) {
            let w = to_complex64(&w);
            let modulus = w.norm() * scale;
            if !(modulus < 1.0) {
                return Err(Error::DivergenceGuard { q: p.q, modulus });
            }
            total /= Complex64::one() - w * t;
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{dim_schur, partitions_of};
    use crate::scalar::{parse_scalar, rational, real};
    use num_complex::Complex;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn p(v: &[u32]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn r(n: i64, d: i64) -> Scalar {
        real(rational(n, d))
    }

    fn param(eig: &[Scalar], q: u64) -> UnramifiedParameter {
        UnramifiedParameter::new(eig.to_vec(), q).unwrap()
    }

    fn random_param(rng: &mut ChaCha8Rng, n: usize, q: u64) -> UnramifiedParameter {
        let eig = (0..n)
            .map(|_| {
                let mut num = rng.gen_range(-5..=5);
                if num == 0 {
                    num = 1;
                }
                r(num, rng.gen_range(1..=4))
            })
            .collect::<Vec<_>>();
        param(&eig, q)
    }

    /// Expands `Π (1 − w t)` one factor at a time.
    fn expand(ws: &[Scalar]) -> Poly<Scalar> {
        ws.iter()
            .fold(Poly::one(), |acc, w| &acc * &Poly::one_minus(w.clone()))
    }

    #[test]
    fn rejects_bad_parameters() {
        assert!(UnramifiedParameter::new(vec![r(0, 1)], 3).is_err());
        assert!(UnramifiedParameter::new(vec![r(1, 1)], 6).is_err());
        assert!(UnramifiedParameter::new(vec![r(1, 1)], 1).is_err());
        assert!(UnramifiedParameter::new(vec![r(1, 1)], 8).is_ok());
        let a = param(&[r(1, 1)], 2);
        let b = param(&[r(1, 1)], 3);
        assert_eq!(additivity_check(&a, &b, &p(&[1])), Err(Error::QMismatch(2, 3)));
    }

    #[test]
    fn standard_representation() {
        let (a, b) = (r(2, 3), Complex::new(rational(1, 2), rational(-1, 1)));
        let l = local_l_factor(&param(&[a.clone(), b.clone()], 5), &p(&[1]));
        assert_eq!(l.reciprocal, &Poly::one_minus(a) * &Poly::one_minus(b));
    }

    #[test]
    fn identity_class_examples() {
        let one = r(1, 1);
        let l = local_l_factor(&param(&[one.clone(), one.clone()], 7), &p(&[2]));
        assert_eq!(l.reciprocal, expand(&[one.clone(), one.clone(), one.clone()]));
        let l = local_l_factor(&param(&vec![one.clone(); 4], 3), &p(&[1, 1]));
        assert_eq!(l.reciprocal, expand(&vec![one; 6]));
        assert_eq!(l.degree(), 6);
    }

    #[test]
    fn vanishing_functor_gives_trivial_factor() {
        let l = local_l_factor(&param(&[r(2, 1), r(3, 1)], 2), &p(&[1, 1, 1]));
        assert_eq!(l.reciprocal, Poly::one());
    }

    #[test]
    fn degree_law() {
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for k in 0..=6 {
            for nu in partitions_of(k) {
                for n in 1..=4 {
                    let l = local_l_factor(&random_param(&mut rng, n, 3), &nu);
                    assert_eq!(l.degree() as u64, dim_schur(&nu, n), "{nu} n={n}");
                    assert!(l.reciprocal.coeff(0).is_one());
                }
            }
        }
    }

    #[test]
    fn gamma_of_trivial_character() {
        let g = gamma_unramified(&param(&[r(1, 1)], 2), &p(&[1]));
        // (1 − t)/(1 − 1/(2t)) = (t − t²)/(t − 1/2)
        let want = RationalFunction::new(
            Poly::new(vec![r(0, 1), r(1, 1), r(-1, 1)]),
            Poly::new(vec![r(-1, 2), r(1, 1)]),
        );
        assert_eq!(g.value(), want);
        let t = r(3, 1);
        let direct = (r(1, 1) - t.clone()) / (r(1, 1) - r(1, 1) / (r(2, 1) * t.clone()));
        assert_eq!(g.value().eval(&t), Some(direct));
    }

    #[test]
    fn gamma_degrees() {
        let g = gamma_unramified(&param(&[r(1, 1), r(1, 1)], 5), &p(&[2]));
        assert_eq!(g.numerator.degree(), Some(3));
        assert_eq!(g.denominator.degree(), Some(3));
    }

    #[test]
    fn gamma_value_is_reduced() {
        let g = gamma_unramified(&param(&[r(1, 1), r(-1, 3)], 3), &p(&[2]));
        let v = g.value();
        assert_eq!(v.numerator().gcd(v.denominator()), Poly::one());
    }

    #[test]
    fn self_dual_gamma_cancels_under_the_functional_equation() {
        let alpha = r(3, 2);
        let par = param(&[alpha.clone(), r(1, 1) / alpha], 7);
        let g = gamma_unramified(&par, &p(&[1]));
        let back = g.dual_substitute().value().compose_reciprocal(&(r(1, 1) / r(7, 1)));
        let one = &back * &g.value();
        assert_eq!(one, RationalFunction::new(Poly::one(), Poly::one()));
    }

    #[test]
    fn dual_substitute_is_an_involution() {
        let mut rng = ChaCha8Rng::seed_from_u64(9);
        for nu in [p(&[1]), p(&[2]), p(&[1, 1]), p(&[2, 1])] {
            let g = gamma_unramified(&random_param(&mut rng, 2, 4), &nu);
            assert_eq!(g.dual_substitute().dual_substitute(), g);
            let dual = gamma_unramified(&random_param(&mut rng, 2, 4), &nu);
            assert_ne!(dual.dual_substitute(), dual);
        }
    }

    #[test]
    fn dual_substitute_is_the_gamma_of_the_dual() {
        let mut rng = ChaCha8Rng::seed_from_u64(21);
        for nu in [p(&[1]), p(&[2]), p(&[2, 1])] {
            let par = random_param(&mut rng, 3, 5);
            let g = gamma_unramified(&par, &nu);
            assert_eq!(g.dual_substitute(), gamma_unramified(&par.dual(), &nu));
            let back = g.dual_substitute().value().compose_reciprocal(&r(1, 5));
            assert_eq!(back, g.value().recip());
        }
    }

    #[test]
    fn exterior_square_additivity() {
        let a = param(&[r(2, 1), r(-1, 3)], 3);
        let b = param(&[r(5, 2), r(1, 1), r(-4, 1)], 3);
        assert!(additivity_check(&a, &b, &p(&[1, 1])).unwrap());
        assert!(additivity_check(&a, &b, &p(&[1, 1, 1])).unwrap());
    }

    #[test]
    fn additivity_detects_a_wrong_decomposition() {
        // Drop the ρ_1⊗ρ_2 factor by hand: the identity must fail.
        let a = param(&[r(2, 1), r(3, 1)], 3);
        let b = param(&[r(5, 1)], 3);
        let lhs = local_l_factor(&a.direct_sum(&b).unwrap(), &p(&[1, 1]));
        let wrong = local_l_factor(&a, &p(&[1, 1])).product(&local_l_factor(&b, &p(&[1, 1])));
        assert_ne!(lhs, wrong);
    }

    #[test]
    fn four_two_additivity_with_gaussian_eigenvalues() {
        let a = param(&[parse_scalar("1/2+i").unwrap(), r(-2, 1)], 2);
        let b = param(&[r(3, 1), parse_scalar("-i").unwrap()], 2);
        assert!(additivity_check(&a, &b, &p(&[4, 2])).unwrap());
    }

    #[test]
    fn tensor_square_examples() {
        let (a, b) = (r(2, 1), r(-3, 5));
        let par = param(&[a.clone(), b.clone()], 3);
        assert!(tensor_square_split(&par));
        let want = expand(&[a.clone() * a.clone(), a.clone() * b.clone(), a.clone() * b.clone(), b.clone() * b]);
        let lhs = local_l_factor(&par, &p(&[1, 1])).product(&local_l_factor(&par, &p(&[2])));
        assert_eq!(lhs.reciprocal, want);

        let single = param(&[a.clone()], 3);
        assert!(tensor_square_split(&single));
        assert_eq!(local_l_factor(&single, &p(&[2])).reciprocal, Poly::one_minus(a.clone() * a));

        assert!(tensor_square_split(&param(&[r(1, 1), r(2, 1), r(3, 1)], 5)));
    }

    #[test]
    fn partial_product_examples() {
        let s = Complex64::new(2.0, 0.0);
        assert_eq!(partial_product(&[], s).unwrap(), Complex64::one());
        let place = (param(&[r(1, 1)], 2), p(&[1]));
        let one = partial_product(std::slice::from_ref(&place), s).unwrap();
        assert!((one - Complex64::new(4.0 / 3.0, 0.0)).norm() < 1e-12);
        let two = partial_product(&[place.clone(), place.clone()], s).unwrap();
        assert!((two - one * one).norm() < 1e-12);
        let err = partial_product(&[place], Complex64::new(0.0, 1.0));
        assert!(matches!(err, Err(Error::DivergenceGuard { q: 2, .. })));
    }

    #[test]
    fn partial_product_matches_exact_polynomial() {
        let par = param(&[r(1, 2), Complex::new(rational(1, 3), rational(1, 4))], 5);
        let nu = p(&[2, 1]);
        let s = Complex64::new(1.5, 0.7);
        let got = partial_product(&[(par.clone(), nu.clone())], s).unwrap();
        let t = (-s * 5f64.ln()).exp();
        let recip = local_l_factor(&par, &nu).reciprocal;
        let mut val = Complex64::zero();
        for c in recip.coeffs().iter().rev() {
            val = val * t + to_complex64(c);
        }
        let want = Complex64::one() / val;
        assert!((got - want).norm() <= 1e-12 * want.norm());
    }

    #[test]
    fn matches_determinant_of_the_functor_matrix() {
        use crate::linalg::{det_one_minus_t, inverse, mat_mul, Matrix};
        use crate::young::schur_functor_matrix;
        let mut rng = ChaCha8Rng::seed_from_u64(17);
        for (n, lam) in [(2, p(&[2])), (2, p(&[2, 1])), (3, p(&[1, 1])), (3, p(&[2, 1])), (2, p(&[3]))] {
            let par = random_param(&mut rng, n, 3);
            let pm: Matrix<Scalar> = loop {
                let m: Matrix<Scalar> = (0..n)
                    .map(|_| (0..n).map(|_| r(rng.gen_range(-3..=3), rng.gen_range(1..=2))).collect())
                    .collect();
                if inverse(&m).is_some() {
                    break m;
                }
            };
            let diag: Matrix<Scalar> = (0..n)
                .map(|i| (0..n).map(|j| if i == j { par.eigenvalues()[i].clone() } else { r(0, 1) }).collect())
                .collect();
            let g = mat_mul(&mat_mul(&pm, &diag), &inverse(&pm).unwrap());
            let a = schur_functor_matrix(&lam, &g, |x| real(x.clone())).unwrap();
            assert_eq!(det_one_minus_t(&a), local_l_factor(&par, &lam).reciprocal, "{lam} n={n}");
        }
    }

    #[test]
    fn parameter_json() {
        let par = param(&[r(1, 2), Complex::new(rational(1, 1), rational(1, 1))], 3);
        let j = serde_json::to_string(&par).unwrap();
        assert_eq!(j, r#"{"eigenvalues":["1/2",["1","1"]],"q":3}"#);
        assert_eq!(serde_json::from_str::<UnramifiedParameter>(&j).unwrap(), par);
        assert!(serde_json::from_str::<UnramifiedParameter>(r#"{"eigenvalues":["0"],"q":3}"#).is_err());
    }
}
