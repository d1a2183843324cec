//! VT codes and the code family `C(α, β, m)`: words with `α` A's and `β`
//! B's whose major index is congruent to `m` modulo `α + β`.
//!
//! Closed forms live here next to the set-level computations they are
//! checked against. Nothing in this module derives a set size from the
//! identity it is supposed to witness.

use std::collections::HashSet;

use num_bigint::BigInt;

use crate::numtheory::{binomial, divisors, euler_phi, gcd, mobius};
use crate::qpoly::{q_binomial, QPoly, ResiduePoly};
use crate::words::{enumerate_code, fold_constant_weight, Symbol, Word, WordSet, MAX_LEN};
use crate::{Error, Exec, Result};

/// Parameters `(α, β, m)` of `C(α, β, m)`, with `m` reduced into
/// `0..α+β`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CodeSpec {
    alpha: usize,
    beta: usize,
    m: usize,
}

impl CodeSpec {
    /// Any integer `m` is accepted and normalised modulo `α + β`.
    pub fn new(alpha: usize, beta: usize, m: i64) -> Result<Self> {
        if alpha == 0 || beta == 0 {
            return Err(Error::InvalidCodeSpec(format!(
                "alpha and beta must be positive, got ({alpha}, {beta})"
            )));
        }
        let n = alpha + beta;
        if n > MAX_LEN {
            return Err(Error::TooLong(n));
        }
        Ok(CodeSpec {
            alpha,
            beta,
            m: m.rem_euclid(n as i64) as usize,
        })
    }

    pub fn alpha(&self) -> usize {
        self.alpha
    }

    pub fn beta(&self) -> usize {
        self.beta
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// Codeword length `α + β`, which is also the modulus.
    pub fn length(&self) -> usize {
        self.alpha + self.beta
    }

    pub fn contains(&self, w: &Word) -> bool {
        code_membership(w, self)
    }

    /// Codewords in lexicographic order.
    pub fn codewords(&self) -> impl Iterator<Item = Word> + '_ {
        enumerate_code(self)
    }

    pub fn to_word_set(&self) -> WordSet {
        WordSet::from_words(self.codewords()).expect("codewords share one length")
    }

    pub fn decode(&self, received: &Word) -> Result<Option<Word>> {
        decode_single_deletion(received, self)
    }
}

/// Parameters of `VT(l-1, m)`: 01-words of length `l - 1` whose moment is
/// `m` modulo `l`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct VTSpec {
    length: usize,
    m: usize,
}

impl VTSpec {
    pub fn new(length: usize, m: i64) -> Result<Self> {
        if length >= MAX_LEN {
            return Err(Error::TooLong(length));
        }
        let modulus = length as i64 + 1;
        Ok(VTSpec {
            length,
            m: m.rem_euclid(modulus) as usize,
        })
    }

    pub fn length(&self) -> usize {
        self.length
    }

    pub fn modulus(&self) -> usize {
        self.length + 1
    }

    pub fn m(&self) -> usize {
        self.m
    }

    /// All members, in lexicographic order.
    pub fn codewords(&self) -> impl Iterator<Item = Word> + '_ {
        let len = self.length;
        (0..(1u64 << len)).filter_map(move |bits| {
            let w = Word::from_bits(bits, len).expect("length below MAX_LEN");
            (w.moment() % self.modulus() as u64 == self.m as u64).then_some(w)
        })
    }
}

/// Whether the 01-sequence `y` (`A = 0`, `B = 1`) lies in the VT code.
pub fn vt_membership(y: &Word, spec: &VTSpec) -> Result<bool> {
    if y.len() != spec.length {
        return Err(Error::LengthMismatch {
            expected: spec.length,
            actual: y.len(),
        });
    }
    Ok(y.moment() % spec.modulus() as u64 == spec.m as u64)
}

/// Whether `w` is a codeword of `C(α, β, m)`.
pub fn code_membership(w: &Word, spec: &CodeSpec) -> bool {
    w.len() == spec.length()
        && w.count_a() == spec.alpha
        && w.major_index() % spec.length() as u64 == spec.m as u64
}

/// `#C(α, β, m)` from the Möbius/totient closed form
/// `(1/(α+β)) Σ_{d | gcd(α,β)} binom((α+β)/d, β/d) μ(d/(d,m)) φ(d)/φ(d/(d,m))`.
pub fn cardinality_closed_form(spec: &CodeSpec) -> Result<u128> {
    let (alpha, beta, m) = (spec.alpha as u64, spec.beta as u64, spec.m as u64);
    let n = alpha + beta;
    let mut sum: i128 = 0;
    for d in divisors(gcd(alpha, beta))? {
        let g = gcd(d, m);
        let reduced = d / g;
        let mu = mobius(reduced)?;
        if mu == 0 {
            continue;
        }
        let (phi_d, phi_r) = (euler_phi(d)?, euler_phi(reduced)?);
        if phi_d % phi_r != 0 {
            return Err(Error::InexactDivision("totient ratio"));
        }
        let ratio = (phi_d / phi_r) as i128;
        let term = i128::try_from(binomial(n / d, beta / d)?)
            .ok()
            .and_then(|b| b.checked_mul(ratio))
            .ok_or(Error::Overflow("cardinality closed form"))?;
        sum = sum
            .checked_add(i128::from(mu) * term)
            .ok_or(Error::Overflow("cardinality closed form"))?;
    }
    if sum < 0 || sum % n as i128 != 0 {
        return Err(Error::InexactDivision("cardinality closed form"));
    }
    Ok((sum / n as i128) as u128)
}

/// `#C(α, β, 0) = (1/(α+β)) Σ_{d | gcd(α,β)} binom((α+β)/d, β/d) φ(d)`.
pub fn cardinality_m0(alpha: usize, beta: usize) -> Result<u128> {
    // validates alpha and beta
    CodeSpec::new(alpha, beta, 0)?;
    let (a, b) = (alpha as u64, beta as u64);
    let n = a + b;
    let mut sum: u128 = 0;
    for d in divisors(gcd(a, b))? {
        let term = binomial(n / d, b / d)?
            .checked_mul(euler_phi(d)? as u128)
            .ok_or(Error::Overflow("cardinality at m = 0"))?;
        sum = sum
            .checked_add(term)
            .ok_or(Error::Overflow("cardinality at m = 0"))?;
    }
    if !sum.is_multiple_of(n as u128) {
        return Err(Error::InexactDivision("cardinality at m = 0"));
    }
    Ok(sum / n as u128)
}

/// `#C(α, β, m)` for every `m` in `0..α+β`, by enumeration.
pub fn residue_counts(alpha: usize, beta: usize, exec: Exec) -> Result<Vec<u64>> {
    let n = alpha + beta;
    if n == 0 {
        return Err(Error::Zero {
            what: "word length",
        });
    }
    fold_constant_weight(
        alpha,
        beta,
        exec,
        || vec![0u64; n],
        |acc, w| acc[w.major_index() as usize % n] += 1,
        |mut a, b| {
            a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
            a
        },
    )
}

/// `#C(α, β, m)` by direct enumeration of the code.
pub fn cardinality_by_enumeration(spec: &CodeSpec) -> u128 {
    enumerate_code(spec).count() as u128
}

/// Closed form of the run-class polynomial `R_r(q)`:
///
/// `q^⌊(r-1)²/4⌋ ([α-1, ⌊(r-2)/2⌋][β-1, ⌊(r-1)/2⌋]
///   + q^β [α-1, ⌊(r-1)/2⌋][β-1, ⌊(r-2)/2⌋])`.
///
/// Values of `r` below 2 give the zero polynomial through the q-binomial
/// convention.
pub fn r_poly_closed_form(alpha: usize, beta: usize, r: i64) -> QPoly {
    let (a, b) = (alpha as i64, beta as i64);
    let lo = (r - 2).div_euclid(2);
    let hi = (r - 1).div_euclid(2);
    let base = ((r - 1) * (r - 1) / 4) as usize;
    let first = &q_binomial(a - 1, lo) * &q_binomial(b - 1, hi);
    let second = (&q_binomial(a - 1, hi) * &q_binomial(b - 1, lo)).shift(beta);
    (first + second).shift(base)
}

/// Sizes around the deletion sphere of a code.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SphereCount {
    /// Size of the union of all single-deletion results, as a set.
    pub sphere: usize,
    /// `Σ ||x||` over codewords.
    pub run_sum: usize,
    pub codewords: usize,
}

impl SphereCount {
    /// Whether the per-codeword spheres are pairwise disjoint.
    pub fn is_disjoint(&self) -> bool {
        self.sphere == self.run_sum
    }
}

pub fn sphere_cardinality(spec: &CodeSpec) -> SphereCount {
    let mut sphere = HashSet::new();
    let mut run_sum = 0;
    let mut codewords = 0;
    for w in enumerate_code(spec) {
        codewords += 1;
        run_sum += w.run_number();
        sphere.extend(w.deletion_sphere());
    }
    SphereCount {
        sphere: sphere.len(),
        run_sum,
        codewords,
    }
}

/// True iff the single-deletion spheres of the members of `c` are pairwise
/// disjoint.
pub fn is_single_deletion_correcting<'a>(c: impl IntoIterator<Item = &'a Word>) -> bool {
    let mut seen = HashSet::new();
    for w in c {
        for d in w.deletion_sphere() {
            if !seen.insert(d) {
                return false;
            }
        }
    }
    true
}

/// Recovers the codeword of `C(α, β, m)` that yields `received` after one
/// deletion, by trying every single-symbol insertion.
///
/// Returns `Ok(None)` when no insertion lands in the code, and
/// [`Error::UniquenessViolation`] if two distinct codewords do.
pub fn decode_single_deletion(received: &Word, spec: &CodeSpec) -> Result<Option<Word>> {
    decode_by_insertion(received, spec.length(), |c| code_membership(c, spec))
}

fn decode_by_insertion(
    received: &Word,
    length: usize,
    is_codeword: impl Fn(&Word) -> bool,
) -> Result<Option<Word>> {
    let expected = length - 1;
    if received.len() != expected {
        return Err(Error::LengthMismatch {
            expected,
            actual: received.len(),
        });
    }
    let mut found: Option<Word> = None;
    for i in 0..=received.len() {
        for sym in [Symbol::A, Symbol::B] {
            let candidate = received.insert(i, sym)?;
            if !is_codeword(&candidate) {
                continue;
            }
            match found {
                None => found = Some(candidate),
                Some(prev) if prev == candidate => {}
                Some(prev) => {
                    return Err(Error::UniquenessViolation {
                        received: received.to_string(),
                        first: prev.to_string(),
                        second: candidate.to_string(),
                    })
                }
            }
        }
    }
    Ok(found)
}

/// `Σ_m #C(α, β, m) q^m` as a residue modulo `q^(α+β) - 1`.
pub fn cardinality_residue(alpha: usize, beta: usize, exec: Exec) -> Result<ResiduePoly> {
    let counts = residue_counts(alpha, beta, exec)?;
    ResiduePoly::from_coeffs(alpha + beta, counts)
}

/// `Σ_m #dS(C(α, β, m)) q^m`, with every sphere size computed as a set.
pub fn sphere_residue(alpha: usize, beta: usize) -> Result<ResiduePoly> {
    let n = alpha + beta;
    let sizes = (0..n)
        .map(|m| CodeSpec::new(alpha, beta, m as i64).map(|s| sphere_cardinality(&s).sphere))
        .collect::<Result<Vec<_>>>()?;
    ResiduePoly::from_coeffs(n, sizes.into_iter().map(BigInt::from))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::words::{dm_distribution, enumerate_constant_weight};

    fn w(s: &str) -> Word {
        s.parse().unwrap()
    }

    fn spec(a: usize, b: usize, m: i64) -> CodeSpec {
        CodeSpec::new(a, b, m).unwrap()
    }

    #[test]
    fn spec_normalizes_m() {
        assert_eq!(spec(2, 2, 5).m(), 1);
        assert_eq!(spec(2, 2, -1).m(), 3);
        assert!(CodeSpec::new(0, 2, 0).is_err());
        assert!(CodeSpec::new(40, 40, 0).is_err());
    }

    #[test]
    fn vt_examples() {
        let y = |s: &str| w(s);
        assert!(vt_membership(&y("100"), &VTSpec::new(3, 1).unwrap()).unwrap());
        assert!(vt_membership(&y("000"), &VTSpec::new(3, 0).unwrap()).unwrap());
        assert!(!vt_membership(&y("101"), &VTSpec::new(3, 1).unwrap()).unwrap());
        assert!(vt_membership(&y("10"), &VTSpec::new(3, 1).unwrap()).is_err());
        assert_eq!(VTSpec::new(3, 1).unwrap().modulus(), 4);
    }

    #[test]
    fn membership_examples() {
        assert!(code_membership(&w("BABA"), &spec(2, 2, 0)));
        assert!(!code_membership(&w("BABA"), &spec(2, 2, 1)));
        assert!(!code_membership(&w("AAB"), &spec(2, 2, 0)));
        assert!(!code_membership(&w("AAAB"), &spec(2, 2, 0)));
    }

    #[test]
    fn membership_agrees_with_vt_of_descent_vector() {
        for a in 1..=5 {
            for b in 1..=5 {
                let n = a + b;
                for m in 0..n as i64 {
                    let cs = spec(a, b, m);
                    let vt = VTSpec::new(n - 1, m).unwrap();
                    for x in enumerate_constant_weight(a, b).unwrap() {
                        let via_vt = vt_membership(&x.descent_vector().as_word(), &vt).unwrap();
                        assert_eq!(code_membership(&x, &cs), via_vt);
                    }
                }
            }
        }
    }

    #[test]
    fn cardinality_examples() {
        assert_eq!(cardinality_closed_form(&spec(2, 2, 0)).unwrap(), 2);
        assert_eq!(cardinality_closed_form(&spec(2, 2, 1)).unwrap(), 1);
        assert_eq!(cardinality_m0(2, 2).unwrap(), 2);
        assert_eq!(cardinality_m0(1, 1).unwrap(), 1);
        assert!(cardinality_m0(0, 1).is_err());
    }

    #[test]
    fn cardinality_frozen_by_enumeration() {
        // values frozen from exhaustive enumeration of C(5,3,0) and C(3,3,0)
        assert_eq!(cardinality_by_enumeration(&spec(5, 3, 0)), 7);
        assert_eq!(cardinality_closed_form(&spec(5, 3, 0)).unwrap(), 7);
        assert_eq!(cardinality_by_enumeration(&spec(3, 3, 0)), 4);
        assert_eq!(cardinality_m0(3, 3).unwrap(), 4);
    }

    #[test]
    fn closed_form_handles_largest_lengths() {
        for (a, b) in [(32, 32), (1, 63), (30, 34)] {
            let n = a + b;
            let total: u128 = (0..n as i64)
                .map(|m| cardinality_closed_form(&spec(a, b, m)).unwrap())
                .sum();
            assert_eq!(total, binomial(n as u64, b as u64).unwrap());
            assert_eq!(
                cardinality_m0(a, b).unwrap(),
                cardinality_closed_form(&spec(a, b, 0)).unwrap()
            );
        }
    }

    #[test]
    fn r_poly_examples() {
        assert_eq!(r_poly_closed_form(2, 2, 2).to_string(), "1 + q^2");
        assert_eq!(r_poly_closed_form(2, 2, 3).to_string(), "q + q^3");
        assert_eq!(r_poly_closed_form(2, 2, 4).to_string(), "q^2 + q^4");
        assert!(r_poly_closed_form(2, 2, 5).is_zero());
        assert!(r_poly_closed_form(2, 2, 1).is_zero());
        assert!(r_poly_closed_form(2, 2, 0).is_zero());
    }

    #[test]
    fn sphere_examples() {
        let s = sphere_cardinality(&spec(2, 2, 0));
        assert_eq!((s.sphere, s.run_sum, s.codewords), (6, 6, 2));
        assert_eq!(sphere_cardinality(&spec(2, 2, 1)).sphere, 3);
        assert_eq!(sphere_cardinality(&spec(1, 1, 0)).sphere, 2);
    }

    #[test]
    fn decoder_examples() {
        assert_eq!(
            decode_single_deletion(&w("AAB"), &spec(2, 2, 1)).unwrap(),
            Some(w("BAAB"))
        );
        assert_eq!(
            decode_single_deletion(&w("ABB"), &spec(2, 2, 0)).unwrap(),
            Some(w("AABB"))
        );
        assert_eq!(
            decode_single_deletion(&w("AAA"), &spec(2, 2, 0)).unwrap(),
            None
        );
        assert_eq!(
            decode_single_deletion(&w("AA"), &spec(2, 2, 0)),
            Err(Error::LengthMismatch {
                expected: 3,
                actual: 2
            })
        );
    }

    #[test]
    fn sdc_examples() {
        let c0 = spec(2, 2, 0).to_word_set();
        assert!(is_single_deletion_correcting(&c0));
        // both spheres contain ABB
        assert!(w("AABB").deletion_sphere().contains(&w("ABB")));
        assert!(w("ABBA").deletion_sphere().contains(&w("ABB")));
        let pair = WordSet::from_words([w("AABB"), w("ABBA")]).unwrap();
        assert!(!is_single_deletion_correcting(&pair));
        assert!(is_single_deletion_correcting(&[w("AB")]));
    }

    #[test]
    fn uniqueness_violation_is_reported() {
        let pair = WordSet::from_words([w("AABB"), w("ABBA")]).unwrap();
        let err = decode_by_insertion(&w("ABB"), 4, |c| pair.contains(c)).unwrap_err();
        assert_eq!(
            err,
            Error::UniquenessViolation {
                received: "ABB".into(),
                first: "AABB".into(),
                second: "ABBA".into(),
            }
        );
        assert_eq!(
            decode_by_insertion(&w("AAB"), 4, |c| pair.contains(c)).unwrap(),
            Some(w("AABB"))
        );
    }

    #[test]
    fn dm_of_code_examples() {
        assert_eq!(
            dm_distribution(spec(2, 2, 0).codewords()).to_string(),
            "1 + q^4"
        );
    }
}
