//! Exact arithmetic for the coefficient rings `Z`, `Z_n` (n >= 2) and `Q`,
//! plus the unital ring homomorphisms between them used for base change.
//!
//! Elements are kept in canonical form at all times: arbitrary-precision
//! integers for `Z`, least nonnegative residues for `Z_n`, and reduced
//! fractions with positive denominator for `Q`.  Equality of elements is
//! therefore plain structural equality.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// Which coefficient ring a value lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum RingDescriptor {
    /// The integers.
    Integers,
    /// Integers modulo `n`, with `n >= 2`.
    IntegersMod(u64),
    /// The rationals.
    Rationals,
}

impl RingDescriptor {
    /// Modular ring constructor; rejects moduli below 2 so that 0 != 1.
    pub fn integers_mod(n: u64) -> Result<Self> {
        if n < 2 {
            return Err(Error::BadModulus(n));
        }
        Ok(RingDescriptor::IntegersMod(n))
    }

    /// Parses the CLI ring selector: `z`, `z:<n>`, or `q`.
    pub fn parse(text: &str) -> Result<Self> {
        let lower = text.trim().to_ascii_lowercase();
        if lower == "z" {
            Ok(RingDescriptor::Integers)
        } else if lower == "q" {
            Ok(RingDescriptor::Rationals)
        } else if let Some(modulus) = lower.strip_prefix("z:") {
            let n: u64 = modulus.parse().map_err(|_| Error::Parse {
                line: 0,
                msg: format!("bad modulus `{modulus}` in ring selector"),
            })?;
            RingDescriptor::integers_mod(n)
        } else {
            Err(Error::Parse {
                line: 0,
                msg: format!("unknown ring selector `{text}` (expected z, z:<n>, or q)"),
            })
        }
    }

    /// Smallest positive `n` with `n*r = 0` for all `r`, or 0 if none exists.
    pub fn characteristic(&self) -> u64 {
        match self {
            RingDescriptor::Integers | RingDescriptor::Rationals => 0,
            RingDescriptor::IntegersMod(n) => *n,
        }
    }

    pub fn is_field(&self) -> bool {
        matches!(self, RingDescriptor::Rationals)
    }

    pub fn zero(&self) -> RingElement {
        RingElement::from_i64(*self, 0)
    }

    pub fn one(&self) -> RingElement {
        RingElement::from_i64(*self, 1)
    }
}

impl fmt::Display for RingDescriptor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingDescriptor::Integers => write!(f, "Z"),
            RingDescriptor::IntegersMod(n) => write!(f, "Z_{n}"),
            RingDescriptor::Rationals => write!(f, "Q"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
enum Value {
    Int(BigInt),
    /// Residue in `[0, n)`; the modulus lives in the descriptor.
    Mod(u64),
    Rat(BigRational),
}

/// An exact element of one of the supported coefficient rings.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RingElement {
    ring: RingDescriptor,
    value: Value,
}

impl RingElement {
    pub fn ring(&self) -> RingDescriptor {
        self.ring
    }

    pub fn from_i64(ring: RingDescriptor, v: i64) -> Self {
        Self::from_bigint(ring, BigInt::from(v))
    }

    /// Canonical image of an integer in the ring.
    pub fn from_bigint(ring: RingDescriptor, v: BigInt) -> Self {
        let value = match ring {
            RingDescriptor::Integers => Value::Int(v),
            RingDescriptor::IntegersMod(n) => Value::Mod(reduce_mod(&v, n)),
            RingDescriptor::Rationals => Value::Rat(BigRational::from_integer(v)),
        };
        RingElement { ring, value }
    }

    /// A rational `num/den` in canonical (reduced, positive-denominator) form.
    /// Only the rationals admit fraction literals.
    pub fn rational(num: BigInt, den: BigInt) -> Result<Self> {
        if den.is_zero() {
            return Err(Error::Parse {
                line: 0,
                msg: "zero denominator".into(),
            });
        }
        Ok(RingElement {
            ring: RingDescriptor::Rationals,
            value: Value::Rat(BigRational::new(num, den)),
        })
    }

    pub fn is_zero(&self) -> bool {
        match &self.value {
            Value::Int(v) => v.is_zero(),
            Value::Mod(r) => *r == 0,
            Value::Rat(q) => q.is_zero(),
        }
    }

    pub fn is_one(&self) -> bool {
        match &self.value {
            Value::Int(v) => v.is_one(),
            Value::Mod(r) => *r == 1,
            Value::Rat(q) => q.is_one(),
        }
    }

    fn check_same_ring(&self, other: &Self) -> Result<()> {
        if self.ring != other.ring {
            return Err(Error::RingMismatch(self.ring, other.ring));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let value = match (&self.value, &other.value) {
            (Value::Int(a), Value::Int(b)) => Value::Int(a + b),
            (Value::Mod(a), Value::Mod(b)) => {
                let n = self.modulus();
                Value::Mod(((*a as u128 + *b as u128) % n as u128) as u64)
            }
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a + b),
            _ => unreachable!("descriptor/value kinds agree by construction"),
        };
        Ok(RingElement {
            ring: self.ring,
            value,
        })
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        let value = match (&self.value, &other.value) {
            (Value::Int(a), Value::Int(b)) => Value::Int(a * b),
            (Value::Mod(a), Value::Mod(b)) => {
                let n = self.modulus();
                Value::Mod(((*a as u128 * *b as u128) % n as u128) as u64)
            }
            (Value::Rat(a), Value::Rat(b)) => Value::Rat(a * b),
            _ => unreachable!("descriptor/value kinds agree by construction"),
        };
        Ok(RingElement {
            ring: self.ring,
            value,
        })
    }

    pub fn neg(&self) -> Self {
        let value = match &self.value {
            Value::Int(a) => Value::Int(-a),
            Value::Mod(a) => {
                let n = self.modulus();
                Value::Mod(if *a == 0 { 0 } else { n - *a })
            }
            Value::Rat(a) => Value::Rat(-a),
        };
        RingElement {
            ring: self.ring,
            value,
        }
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.add(&other.neg())
    }

    fn modulus(&self) -> u64 {
        match self.ring {
            RingDescriptor::IntegersMod(n) => n,
            _ => unreachable!("modulus only queried on modular elements"),
        }
    }

    /// Exact division, available over the rationals only.  Division by zero
    /// is a caller bug and panics.
    pub fn div(&self, other: &Self) -> Result<Self> {
        self.check_same_ring(other)?;
        match (&self.value, &other.value) {
            (Value::Rat(a), Value::Rat(b)) => {
                assert!(!b.is_zero(), "division by zero");
                Ok(RingElement {
                    ring: self.ring,
                    value: Value::Rat(a / b),
                })
            }
            _ => Err(Error::NonFieldCoefficients),
        }
    }

    /// True when the canonical integer/fraction is negative.  Modular
    /// residues are never negative.
    pub fn is_negative(&self) -> bool {
        match &self.value {
            Value::Int(v) => v.is_negative(),
            Value::Mod(_) => false,
            Value::Rat(q) => q.is_negative(),
        }
    }

    /// Absolute value, used when pretty-printing `c x` vs `- c x`.
    pub fn abs(&self) -> Self {
        if self.is_negative() {
            self.neg()
        } else {
            self.clone()
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match &self.value {
            Value::Int(v) => write!(f, "{v}"),
            Value::Mod(r) => write!(f, "{r}"),
            Value::Rat(q) => write!(f, "{q}"),
        }
    }
}

fn reduce_mod(v: &BigInt, n: u64) -> u64 {
    use num_integer::Integer;
    let m = BigInt::from(n);
    let r = v.mod_floor(&m);
    // mod_floor of a BigInt by a positive modulus fits in u64
    let (_, digits) = r.to_u64_digits();
    digits.first().copied().unwrap_or(0)
}

/// A unital ring homomorphism between two supported rings.
///
/// The legal pairs are exactly: `Z -> anything`, `Z_m -> Z_n` when `n | m`,
/// and `Q -> Q`.  `new` rejects everything else.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct RingHom {
    source: RingDescriptor,
    target: RingDescriptor,
}

impl RingHom {
    pub fn new(source: RingDescriptor, target: RingDescriptor) -> Result<Self> {
        use RingDescriptor::*;
        let ok = match (source, target) {
            (Integers, _) => true,
            (IntegersMod(m), IntegersMod(n)) => m % n == 0,
            (Rationals, Rationals) => true,
            _ => false,
        };
        if ok {
            Ok(RingHom { source, target })
        } else {
            Err(Error::NoSuchHom(source, target))
        }
    }

    pub fn source(&self) -> RingDescriptor {
        self.source
    }

    pub fn target(&self) -> RingDescriptor {
        self.target
    }

    pub fn apply(&self, a: &RingElement) -> Result<RingElement> {
        if a.ring != self.source {
            return Err(Error::RingMismatch(a.ring, self.source));
        }
        let out = match (&a.value, self.target) {
            (Value::Int(v), _) => RingElement::from_bigint(self.target, v.clone()),
            (Value::Mod(r), RingDescriptor::IntegersMod(n)) => RingElement {
                ring: self.target,
                value: Value::Mod(*r % n),
            },
            (Value::Rat(q), RingDescriptor::Rationals) => RingElement {
                ring: self.target,
                value: Value::Rat(q.clone()),
            },
            _ => unreachable!("construction admits only legal pairs"),
        };
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn zmod(n: u64) -> RingDescriptor {
        RingDescriptor::integers_mod(n).unwrap()
    }

    #[test]
    fn modular_add_wraps() {
        let r = zmod(6);
        let a = RingElement::from_i64(r, 4);
        let b = RingElement::from_i64(r, 5);
        assert_eq!(a.add(&b).unwrap(), RingElement::from_i64(r, 3));
    }

    #[test]
    fn rational_add_reduces() {
        let q = RingDescriptor::Rationals;
        let a = RingElement::rational(1.into(), 2.into()).unwrap();
        let b = RingElement::rational(1.into(), 3.into()).unwrap();
        let sum = a.add(&b).unwrap();
        assert_eq!(sum, RingElement::rational(5.into(), 6.into()).unwrap());
        let _ = q;
    }

    #[test]
    fn integer_additive_inverse() {
        let z = RingDescriptor::Integers;
        let a = RingElement::from_i64(z, 2);
        assert!(a.add(&a.neg()).unwrap().is_zero());
    }

    #[test]
    fn zero_divisors_mod_six() {
        let r = zmod(6);
        let a = RingElement::from_i64(r, 2);
        let b = RingElement::from_i64(r, 3);
        assert!(a.mul(&b).unwrap().is_zero());
    }

    #[test]
    fn rational_reciprocal() {
        let a = RingElement::rational(2.into(), 3.into()).unwrap();
        let b = RingElement::rational(3.into(), 2.into()).unwrap();
        assert!(a.mul(&b).unwrap().is_one());
    }

    #[test]
    fn absorbing_zero() {
        let z = RingDescriptor::Integers;
        let a = RingElement::from_i64(z, 5);
        assert!(a.mul(&z.zero()).unwrap().is_zero());
    }

    #[test]
    fn characteristics() {
        assert_eq!(RingDescriptor::Integers.characteristic(), 0);
        assert_eq!(zmod(6).characteristic(), 6);
        assert_eq!(RingDescriptor::Rationals.characteristic(), 0);
    }

    #[test]
    fn characteristic_kills_and_nothing_less() {
        let r = zmod(6);
        for x in 0..6 {
            let x = RingElement::from_i64(r, x);
            let mut acc = r.zero();
            for _ in 0..6 {
                acc = acc.add(&x).unwrap();
            }
            assert!(acc.is_zero());
        }
        let one = r.one();
        let mut acc = r.zero();
        for _ in 1..6 {
            acc = acc.add(&one).unwrap();
            assert!(!acc.is_zero());
        }
    }

    #[test]
    fn hom_examples() {
        let z = RingDescriptor::Integers;
        let h = RingHom::new(z, zmod(2)).unwrap();
        let five = RingElement::from_i64(z, 5);
        assert_eq!(h.apply(&five).unwrap(), RingElement::from_i64(zmod(2), 1));

        let h = RingHom::new(z, RingDescriptor::Rationals).unwrap();
        assert_eq!(
            h.apply(&five).unwrap(),
            RingElement::from_i64(RingDescriptor::Rationals, 5)
        );

        assert_eq!(
            RingHom::new(zmod(6), zmod(4)),
            Err(Error::NoSuchHom(zmod(6), zmod(4)))
        );
    }

    /// Brute-force oracle: a unital hom `Z_m -> Z_n` must send `k` to
    /// `k mod n`, and that assignment is well defined and additive on all
    /// residue pairs iff it respects the wraparound at `m`.
    #[test]
    fn hom_existence_matches_residue_brute_force() {
        for m in 2..=12u64 {
            for n in 2..=12u64 {
                let mut consistent = true;
                'outer: for a in 0..m {
                    for b in 0..m {
                        let lhs = ((a + b) % m) % n;
                        let rhs = (a % n + b % n) % n;
                        if lhs != rhs {
                            consistent = false;
                            break 'outer;
                        }
                    }
                }
                assert_eq!(
                    RingHom::new(zmod(m), zmod(n)).is_ok(),
                    consistent,
                    "m={m} n={n}"
                );
                assert_eq!(consistent, m % n == 0, "m={m} n={n}");
            }
        }
    }

    #[test]
    fn parse_selectors() {
        assert_eq!(
            RingDescriptor::parse("z").unwrap(),
            RingDescriptor::Integers
        );
        assert_eq!(RingDescriptor::parse("z:6").unwrap(), zmod(6));
        assert_eq!(
            RingDescriptor::parse("q").unwrap(),
            RingDescriptor::Rationals
        );
        assert!(RingDescriptor::parse("z:1").is_err());
        assert!(RingDescriptor::parse("f7").is_err());
    }

    fn arb_element(ring: RingDescriptor) -> impl Strategy<Value = RingElement> {
        (-50i64..=50).prop_map(move |v| match ring {
            RingDescriptor::Rationals => {
                let den = (v.rem_euclid(7)) + 1;
                RingElement::rational(v.into(), den.into()).unwrap()
            }
            _ => RingElement::from_i64(ring, v),
        })
    }

    fn ring_axioms(
        ring: RingDescriptor,
    ) -> impl Strategy<Value = (RingElement, RingElement, RingElement)> {
        (arb_element(ring), arb_element(ring), arb_element(ring))
    }

    macro_rules! axioms_for {
        ($name:ident, $ring:expr) => {
            proptest! {
                #![proptest_config(ProptestConfig::with_cases(1000))]
                #[test]
                fn $name((a, b, c) in ring_axioms($ring)) {
                    // additive group, commutativity, distributivity, identities
                    prop_assert_eq!(a.add(&b).unwrap(), b.add(&a).unwrap());
                    prop_assert_eq!(
                        a.add(&b).unwrap().add(&c).unwrap(),
                        a.add(&b.add(&c).unwrap()).unwrap()
                    );
                    prop_assert_eq!(a.mul(&b).unwrap(), b.mul(&a).unwrap());
                    prop_assert_eq!(
                        a.mul(&b).unwrap().mul(&c).unwrap(),
                        a.mul(&b.mul(&c).unwrap()).unwrap()
                    );
                    prop_assert_eq!(
                        a.mul(&b.add(&c).unwrap()).unwrap(),
                        a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap()
                    );
                    let ring = a.ring();
                    prop_assert_eq!(a.add(&ring.zero()).unwrap(), a.clone());
                    prop_assert_eq!(a.mul(&ring.one()).unwrap(), a.clone());
                    prop_assert!(a.add(&a.neg()).unwrap().is_zero());
                }
            }
        };
    }

    axioms_for!(ring_axioms_integers, RingDescriptor::Integers);
    axioms_for!(ring_axioms_mod_six, zmod(6));
    axioms_for!(ring_axioms_rationals, RingDescriptor::Rationals);

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(500))]
        #[test]
        fn hom_respects_operations((a, b) in (arb_element(RingDescriptor::Integers),
                                              arb_element(RingDescriptor::Integers))) {
            for target in [RingDescriptor::Integers, zmod(6), zmod(2), RingDescriptor::Rationals] {
                let h = RingHom::new(RingDescriptor::Integers, target).unwrap();
                prop_assert_eq!(
                    h.apply(&a.add(&b).unwrap()).unwrap(),
                    h.apply(&a).unwrap().add(&h.apply(&b).unwrap()).unwrap()
                );
                prop_assert_eq!(
                    h.apply(&a.mul(&b).unwrap()).unwrap(),
                    h.apply(&a).unwrap().mul(&h.apply(&b).unwrap()).unwrap()
                );
                prop_assert!(h.apply(&RingDescriptor::Integers.one()).unwrap().is_one());
            }
            let h = RingHom::new(zmod(6), zmod(3)).unwrap();
            let am = RingElement::from_i64(zmod(6), 4);
            let bm = RingElement::from_i64(zmod(6), 5);
            prop_assert_eq!(
                h.apply(&am.mul(&bm).unwrap()).unwrap(),
                h.apply(&am).unwrap().mul(&h.apply(&bm).unwrap()).unwrap()
            );
        }
    }
}
