//! Coefficient rings and their ideal lattices in canonical form.
//!
//! Supported rings are `Z`, `Z/n` (n >= 2), and finite products of those,
//! nested at most four deep. Every ideal of such a ring is determined by one
//! generator per leaf factor, so ideals are stored in a canonical generator
//! form and the lattice operations reduce to gcd/lcm/divisibility
//! arithmetic:
//!
//! * `Z`: the ideal `gZ` is stored as `g >= 0`, with `g = 0` denoting the
//!   zero ideal. Sum is gcd, intersection is lcm (`lcm(g, 0) = 0`).
//! * `Z/n`: an ideal is `(d)` for a unique positive divisor `d` of `n`,
//!   stored as that divisor; `d = n` denotes the zero ideal and `d = 1` the
//!   whole ring. A field is used as `Z/p` for `p` prime.
//! * products: componentwise.
//!
//! Canonical form makes ideal equality structural equality, which the rest
//! of the crate depends on.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use alloc::{format, vec};
use core::fmt;
use num_integer::Integer;

/// Maximum nesting depth of product ring descriptions.
pub const MAX_PRODUCT_DEPTH: usize = 4;

/// Description of a supported coefficient ring.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RingSpec {
    /// The integers.
    Z,
    /// The quotient `Z/n`, `n >= 2`.
    Zmod(u64),
    /// A finite product of supported rings, taken componentwise.
    Product(Vec<RingSpec>),
}

/// An element of a supported ring, shaped like its [`RingSpec`].
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum RingElement {
    /// An integer.
    Int(i64),
    /// A residue in `Z/n`, reduced to `0..n`.
    Mod(u64),
    /// A tuple of factor elements.
    Tuple(Vec<RingElement>),
}

/// An ideal of a supported ring, in canonical generator form.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum RIdeal {
    /// `gZ`; `g = 0` is the zero ideal, `g = 1` the whole ring.
    Int(u64),
    /// `(d)` in `Z/n` for a positive divisor `d` of `n`; `d = n` is the zero
    /// ideal, `d = 1` the whole ring.
    Mod(u64),
    /// Componentwise ideal of a product ring.
    Product(Vec<RIdeal>),
}

/// Validation and arithmetic failures for ring-level data.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum RingError {
    /// A modulus below 2 was supplied.
    InvalidModulus(u64),
    /// A product ring with no factors was supplied.
    EmptyProduct,
    /// Product nesting exceeded [`MAX_PRODUCT_DEPTH`].
    TooDeep(usize),
    /// An element or ideal does not match the shape of the ring.
    Shape {
        /// What the ring spec called for.
        expected: String,
        /// What was found instead.
        found: String,
    },
    /// An ideal is not in canonical form.
    NonCanonical(String),
    /// The requested enumeration is infinite (the spec involves `Z`).
    InfiniteEnumeration,
}

impl fmt::Display for RingError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingError::InvalidModulus(n) => write!(f, "modulus must be at least 2, got {n}"),
            RingError::EmptyProduct => write!(f, "product ring must have at least one factor"),
            RingError::TooDeep(d) => {
                write!(f, "product nesting depth {d} exceeds the maximum of {MAX_PRODUCT_DEPTH}")
            }
            RingError::Shape { expected, found } => write!(f, "shape mismatch: expected {expected}, found {found}"),
            RingError::NonCanonical(msg) => write!(f, "ideal not in canonical form: {msg}"),
            RingError::InfiniteEnumeration => {
                write!(f, "enumeration over Z is infinite; only Z/n and products of Z/n can be enumerated")
            }
        }
    }
}

impl core::error::Error for RingError {}

impl fmt::Display for RingSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingSpec::Z => write!(f, "Z"),
            RingSpec::Zmod(n) => write!(f, "Z/{n}"),
            RingSpec::Product(fs) => {
                for (i, s) in fs.iter().enumerate() {
                    if i > 0 {
                        write!(f, " x ")?;
                    }
                    if matches!(s, RingSpec::Product(_)) {
                        write!(f, "({s})")?;
                    } else {
                        write!(f, "{s}")?;
                    }
                }
                Ok(())
            }
        }
    }
}

impl fmt::Display for RingElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RingElement::Int(x) => write!(f, "{x}"),
            RingElement::Mod(x) => write!(f, "{x}"),
            RingElement::Tuple(xs) => fmt_tuple(f, xs),
        }
    }
}

/// Parenthesized comma-separated rendering shared by tuple-shaped values.
fn fmt_tuple<T: fmt::Display>(f: &mut fmt::Formatter<'_>, xs: &[T]) -> fmt::Result {
    write!(f, "(")?;
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    write!(f, ")")
}

impl RingSpec {
    /// Checks moduli, factor counts, and nesting depth.
    pub fn validate(&self) -> Result<(), RingError> {
        self.validate_depth(1)
    }

    fn validate_depth(&self, depth: usize) -> Result<(), RingError> {
        if depth > MAX_PRODUCT_DEPTH {
            return Err(RingError::TooDeep(depth));
        }
        match self {
            RingSpec::Z => Ok(()),
            RingSpec::Zmod(n) if *n < 2 => Err(RingError::InvalidModulus(*n)),
            RingSpec::Zmod(_) => Ok(()),
            RingSpec::Product(fs) if fs.is_empty() => Err(RingError::EmptyProduct),
            RingSpec::Product(fs) => fs.iter().try_for_each(|s| s.validate_depth(depth + 1)),
        }
    }

    /// Whether the ring has finitely many elements.
    pub fn is_finite(&self) -> bool {
        match self {
            RingSpec::Z => false,
            RingSpec::Zmod(_) => true,
            RingSpec::Product(fs) => fs.iter().all(RingSpec::is_finite),
        }
    }

    /// Number of elements for finite rings.
    pub fn cardinality(&self) -> Result<u128, RingError> {
        match self {
            RingSpec::Z => Err(RingError::InfiniteEnumeration),
            RingSpec::Zmod(n) => Ok(*n as u128),
            RingSpec::Product(fs) => fs.iter().map(RingSpec::cardinality).product(),
        }
    }

    /// Moduli of the leaf `Z/n` factors, left to right. Fails on `Z`.
    pub fn leaf_moduli(&self) -> Result<Vec<u64>, RingError> {
        let mut out = Vec::new();
        self.collect_leaves(&mut out)?;
        Ok(out)
    }

    fn collect_leaves(&self, out: &mut Vec<u64>) -> Result<(), RingError> {
        match self {
            RingSpec::Z => Err(RingError::InfiniteEnumeration),
            RingSpec::Zmod(n) => {
                out.push(*n);
                Ok(())
            }
            RingSpec::Product(fs) => fs.iter().try_for_each(|s| s.collect_leaves(out)),
        }
    }

    /// Flattens a checked element of a finite ring into one residue per
    /// leaf factor, in [`RingSpec::leaf_moduli`] order.
    pub fn flatten_element(&self, e: &RingElement) -> Result<Vec<u64>, RingError> {
        self.check_element(e)?;
        fn walk(spec: &RingSpec, e: &RingElement, out: &mut Vec<u64>) -> Result<(), RingError> {
            match (spec, e) {
                (RingSpec::Z, _) => Err(RingError::InfiniteEnumeration),
                (RingSpec::Zmod(_), RingElement::Mod(v)) => {
                    out.push(*v);
                    Ok(())
                }
                (RingSpec::Product(fs), RingElement::Tuple(es)) => {
                    fs.iter().zip(es).try_for_each(|(f, x)| walk(f, x, out))
                }
                _ => unreachable!("checked above"),
            }
        }
        let mut out = Vec::new();
        walk(self, e, &mut out)?;
        Ok(out)
    }

    /// Rebuilds an element of a finite ring from per-leaf residues
    /// (inverse of [`RingSpec::flatten_element`]).
    pub fn element_from_leaves(&self, leaves: &[u64]) -> Result<RingElement, RingError> {
        fn walk(spec: &RingSpec, leaves: &mut core::slice::Iter<'_, u64>) -> Result<RingElement, RingError> {
            match spec {
                RingSpec::Z => Err(RingError::InfiniteEnumeration),
                RingSpec::Zmod(n) => {
                    let v = *leaves.next().ok_or(RingError::Shape {
                        expected: "one residue per leaf factor".into(),
                        found: "too few residues".into(),
                    })?;
                    if v < *n {
                        Ok(RingElement::Mod(v))
                    } else {
                        Err(RingError::Shape { expected: format!("residue below {n}"), found: v.to_string() })
                    }
                }
                RingSpec::Product(fs) => {
                    Ok(RingElement::Tuple(fs.iter().map(|f| walk(f, leaves)).collect::<Result<_, _>>()?))
                }
            }
        }
        let mut iter = leaves.iter();
        let e = walk(self, &mut iter)?;
        if iter.next().is_some() {
            return Err(RingError::Shape {
                expected: "one residue per leaf factor".into(),
                found: "too many residues".into(),
            });
        }
        Ok(e)
    }

    /// The additive identity.
    pub fn zero(&self) -> RingElement {
        match self {
            RingSpec::Z => RingElement::Int(0),
            RingSpec::Zmod(_) => RingElement::Mod(0),
            RingSpec::Product(fs) => RingElement::Tuple(fs.iter().map(RingSpec::zero).collect()),
        }
    }

    /// The multiplicative identity.
    pub fn one(&self) -> RingElement {
        match self {
            RingSpec::Z => RingElement::Int(1),
            RingSpec::Zmod(_) => RingElement::Mod(1),
            RingSpec::Product(fs) => RingElement::Tuple(fs.iter().map(RingSpec::one).collect()),
        }
    }

    /// Checks that `e` is shaped like this ring and fully reduced.
    pub fn check_element(&self, e: &RingElement) -> Result<(), RingError> {
        match (self, e) {
            (RingSpec::Z, RingElement::Int(_)) => Ok(()),
            (RingSpec::Zmod(n), RingElement::Mod(v)) => {
                if v < n {
                    Ok(())
                } else {
                    Err(RingError::Shape {
                        expected: format!("residue below {n}"),
                        found: v.to_string(),
                    })
                }
            }
            (RingSpec::Product(fs), RingElement::Tuple(es)) if fs.len() == es.len() => {
                fs.iter().zip(es).try_for_each(|(s, e)| s.check_element(e))
            }
            _ => Err(RingError::Shape {
                expected: self.to_string(),
                found: format!("element {e}"),
            }),
        }
    }

    /// Checks that `i` is shaped like this ring and canonical.
    pub fn check_ideal(&self, i: &RIdeal) -> Result<(), RingError> {
        match (self, i) {
            (RingSpec::Z, RIdeal::Int(_)) => Ok(()),
            (RingSpec::Zmod(n), RIdeal::Mod(d)) => {
                if *d >= 1 && d <= n && n % d == 0 {
                    Ok(())
                } else {
                    Err(RingError::NonCanonical(format!("generator {d} is not a positive divisor of {n}")))
                }
            }
            (RingSpec::Product(fs), RIdeal::Product(is)) if fs.len() == is.len() => {
                fs.iter().zip(is).try_for_each(|(s, i)| s.check_ideal(i))
            }
            _ => Err(RingError::Shape {
                expected: self.to_string(),
                found: format!("ideal {i}"),
            }),
        }
    }

    /// Elementwise sum.
    pub fn add(&self, a: &RingElement, b: &RingElement) -> RingElement {
        match (self, a, b) {
            (RingSpec::Z, RingElement::Int(x), RingElement::Int(y)) => {
                RingElement::Int(x.checked_add(*y).expect("integer coefficient overflow"))
            }
            (RingSpec::Zmod(n), RingElement::Mod(x), RingElement::Mod(y)) => RingElement::Mod((x + y) % n),
            (RingSpec::Product(fs), RingElement::Tuple(xs), RingElement::Tuple(ys)) => {
                RingElement::Tuple(fs.iter().zip(xs.iter().zip(ys)).map(|(s, (x, y))| s.add(x, y)).collect())
            }
            _ => panic!("ring element shape mismatch in add"),
        }
    }

    /// Elementwise product.
    pub fn mul(&self, a: &RingElement, b: &RingElement) -> RingElement {
        match (self, a, b) {
            (RingSpec::Z, RingElement::Int(x), RingElement::Int(y)) => {
                RingElement::Int(x.checked_mul(*y).expect("integer coefficient overflow"))
            }
            (RingSpec::Zmod(n), RingElement::Mod(x), RingElement::Mod(y)) => {
                RingElement::Mod(((*x as u128 * *y as u128) % *n as u128) as u64)
            }
            (RingSpec::Product(fs), RingElement::Tuple(xs), RingElement::Tuple(ys)) => {
                RingElement::Tuple(fs.iter().zip(xs.iter().zip(ys)).map(|(s, (x, y))| s.mul(x, y)).collect())
            }
            _ => panic!("ring element shape mismatch in mul"),
        }
    }

    /// Additive inverse.
    pub fn neg(&self, a: &RingElement) -> RingElement {
        match (self, a) {
            (RingSpec::Z, RingElement::Int(x)) => RingElement::Int(x.checked_neg().expect("integer overflow")),
            (RingSpec::Zmod(n), RingElement::Mod(x)) => RingElement::Mod(if *x == 0 { 0 } else { n - x }),
            (RingSpec::Product(fs), RingElement::Tuple(xs)) => {
                RingElement::Tuple(fs.iter().zip(xs).map(|(s, x)| s.neg(x)).collect())
            }
            _ => panic!("ring element shape mismatch in neg"),
        }
    }

    /// Whether `e` is the zero element.
    pub fn is_zero(&self, e: &RingElement) -> bool {
        match e {
            RingElement::Int(x) => *x == 0,
            RingElement::Mod(x) => *x == 0,
            RingElement::Tuple(xs) => xs.iter().zip(self.factors()).all(|(x, s)| s.is_zero(x)),
        }
    }

    fn factors(&self) -> &[RingSpec] {
        match self {
            RingSpec::Product(fs) => fs,
            _ => core::slice::from_ref(self),
        }
    }

    /// All elements of a finite ring, sorted.
    pub fn enumerate_elements(&self) -> Result<Vec<RingElement>, RingError> {
        match self {
            RingSpec::Z => Err(RingError::InfiniteEnumeration),
            RingSpec::Zmod(n) => Ok((0..*n).map(RingElement::Mod).collect()),
            RingSpec::Product(fs) => {
                let mut out = vec![Vec::new()];
                for factor in fs {
                    let elems = factor.enumerate_elements()?;
                    out = out
                        .into_iter()
                        .flat_map(|prefix: Vec<RingElement>| {
                            elems.iter().map(move |e| {
                                let mut v = prefix.clone();
                                v.push(e.clone());
                                v
                            })
                        })
                        .collect();
                }
                Ok(out.into_iter().map(RingElement::Tuple).collect())
            }
        }
    }

    /// All ideals of a finite ring, sorted by canonical form (for `Z/n`,
    /// ascending generators starting at the whole ring).
    pub fn enumerate_ideals(&self) -> Result<Vec<RIdeal>, RingError> {
        match self {
            RingSpec::Z => Err(RingError::InfiniteEnumeration),
            RingSpec::Zmod(n) => Ok(divisors(*n).into_iter().map(RIdeal::Mod).collect()),
            RingSpec::Product(fs) => {
                let mut out = vec![Vec::new()];
                for factor in fs {
                    let ideals = factor.enumerate_ideals()?;
                    out = out
                        .into_iter()
                        .flat_map(|prefix: Vec<RIdeal>| {
                            ideals.iter().map(move |i| {
                                let mut v = prefix.clone();
                                v.push(i.clone());
                                v
                            })
                        })
                        .collect();
                }
                let mut ideals: Vec<RIdeal> = out.into_iter().map(RIdeal::Product).collect();
                ideals.sort();
                Ok(ideals)
            }
        }
    }

    /// The zero ideal.
    pub fn zero_ideal(&self) -> RIdeal {
        match self {
            RingSpec::Z => RIdeal::Int(0),
            RingSpec::Zmod(n) => RIdeal::Mod(*n),
            RingSpec::Product(fs) => RIdeal::Product(fs.iter().map(RingSpec::zero_ideal).collect()),
        }
    }

    /// The whole ring as an ideal.
    pub fn unit_ideal(&self) -> RIdeal {
        match self {
            RingSpec::Z => RIdeal::Int(1),
            RingSpec::Zmod(_) => RIdeal::Mod(1),
            RingSpec::Product(fs) => RIdeal::Product(fs.iter().map(RingSpec::unit_ideal).collect()),
        }
    }

    /// The principal ideal generated by `e`, in canonical form.
    pub fn principal_ideal(&self, e: &RingElement) -> RIdeal {
        match (self, e) {
            (RingSpec::Z, RingElement::Int(x)) => RIdeal::Int(x.unsigned_abs()),
            (RingSpec::Zmod(n), RingElement::Mod(v)) => RIdeal::modular(*n, *v),
            (RingSpec::Product(fs), RingElement::Tuple(xs)) => {
                RIdeal::Product(fs.iter().zip(xs).map(|(s, x)| s.principal_ideal(x)).collect())
            }
            _ => panic!("ring element shape mismatch in principal_ideal"),
        }
    }

    /// Canonical ideal generated by a set of elements (their gcd per leaf).
    pub fn ideal_generated_by(&self, elems: &[RingElement]) -> RIdeal {
        elems
            .iter()
            .map(|e| self.principal_ideal(e))
            .fold(self.zero_ideal(), |acc, i| acc.sum(&i))
    }
}

/// Positive divisors of `m`, ascending.
pub fn divisors(m: u64) -> Vec<u64> {
    let mut small = Vec::new();
    let mut large = Vec::new();
    let mut d = 1;
    while d * d <= m {
        if m % d == 0 {
            small.push(d);
            if d * d != m {
                large.push(m / d);
            }
        }
        d += 1;
    }
    large.reverse();
    small.extend(large);
    small
}

impl fmt::Display for RIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RIdeal::Int(g) => write!(f, "gen {g}"),
            RIdeal::Mod(d) => write!(f, "gen {d}"),
            RIdeal::Product(is) => fmt_tuple(f, is),
        }
    }
}

impl RIdeal {
    /// Canonical ideal of `Z` generated by `g`.
    pub fn integer(g: i64) -> RIdeal {
        RIdeal::Int(g.unsigned_abs())
    }

    /// Canonical ideal of `Z/n` generated by `raw` (any representative).
    pub fn modular(n: u64, raw: u64) -> RIdeal {
        assert!(n >= 2, "modulus must be at least 2");
        RIdeal::Mod(num_integer::gcd(raw % n, n))
    }

    /// One canonical generator per leaf factor of a finite ring (for the
    /// zero ideal of `Z/n` the generator is `n`, which reduces to the zero
    /// residue).
    pub fn leaf_generators(&self, spec: &RingSpec) -> Result<Vec<u64>, RingError> {
        spec.check_ideal(self)?;
        fn walk(i: &RIdeal, out: &mut Vec<u64>) -> Result<(), RingError> {
            match i {
                RIdeal::Int(_) => Err(RingError::InfiniteEnumeration),
                RIdeal::Mod(d) => {
                    out.push(*d);
                    Ok(())
                }
                RIdeal::Product(fs) => fs.iter().try_for_each(|f| walk(f, out)),
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out)?;
        Ok(out)
    }

    /// Rebuilds a canonical ideal of a finite ring from one generator per
    /// leaf factor (inverse of [`RIdeal::leaf_generators`]).
    pub fn from_leaf_generators(spec: &RingSpec, gens: &[u64]) -> Result<RIdeal, RingError> {
        fn walk(spec: &RingSpec, gens: &mut core::slice::Iter<'_, u64>) -> Result<RIdeal, RingError> {
            match spec {
                RingSpec::Z => Err(RingError::InfiniteEnumeration),
                RingSpec::Zmod(n) => {
                    let d = *gens.next().ok_or(RingError::Shape {
                        expected: "one generator per leaf factor".into(),
                        found: "too few generators".into(),
                    })?;
                    Ok(RIdeal::modular(*n, d))
                }
                RingSpec::Product(fs) => {
                    Ok(RIdeal::Product(fs.iter().map(|f| walk(f, gens)).collect::<Result<_, _>>()?))
                }
            }
        }
        let mut iter = gens.iter();
        let i = walk(spec, &mut iter)?;
        if iter.next().is_some() {
            return Err(RingError::Shape {
                expected: "one generator per leaf factor".into(),
                found: "too many generators".into(),
            });
        }
        Ok(i)
    }

    /// Ideal sum (join in the ideal lattice): componentwise gcd.
    pub fn sum(&self, other: &RIdeal) -> RIdeal {
        match (self, other) {
            (RIdeal::Int(a), RIdeal::Int(b)) => RIdeal::Int(a.gcd(b)),
            (RIdeal::Mod(a), RIdeal::Mod(b)) => RIdeal::Mod(a.gcd(b)),
            (RIdeal::Product(xs), RIdeal::Product(ys)) if xs.len() == ys.len() => {
                RIdeal::Product(xs.iter().zip(ys).map(|(x, y)| x.sum(y)).collect())
            }
            _ => panic!("ideal shape mismatch in sum"),
        }
    }

    /// Ideal intersection (meet in the ideal lattice): componentwise lcm,
    /// with `lcm(g, 0) = 0` over `Z`.
    ///
    /// Panics if an integer generator exceeds `u64` range; generators within
    /// the documented input bounds cannot overflow a single intersection.
    pub fn intersect(&self, other: &RIdeal) -> RIdeal {
        match (self, other) {
            (RIdeal::Int(a), RIdeal::Int(b)) => {
                if *a == 0 || *b == 0 {
                    RIdeal::Int(0)
                } else {
                    let l = (*a as u128 / a.gcd(b) as u128) * *b as u128;
                    RIdeal::Int(u64::try_from(l).expect("integer ideal generator overflow in lcm"))
                }
            }
            (RIdeal::Mod(a), RIdeal::Mod(b)) => RIdeal::Mod(a.lcm(b)),
            (RIdeal::Product(xs), RIdeal::Product(ys)) if xs.len() == ys.len() => {
                RIdeal::Product(xs.iter().zip(ys).map(|(x, y)| x.intersect(y)).collect())
            }
            _ => panic!("ideal shape mismatch in intersect"),
        }
    }

    /// Whether `self` contains `other` as a set: componentwise divisibility
    /// of generators (every generator divides 0).
    pub fn contains_ideal(&self, other: &RIdeal) -> bool {
        match (self, other) {
            (RIdeal::Int(a), RIdeal::Int(b)) => *b == 0 || (*a != 0 && b % a == 0),
            (RIdeal::Mod(a), RIdeal::Mod(b)) => b % a == 0,
            (RIdeal::Product(xs), RIdeal::Product(ys)) if xs.len() == ys.len() => {
                xs.iter().zip(ys).all(|(x, y)| x.contains_ideal(y))
            }
            _ => panic!("ideal shape mismatch in contains_ideal"),
        }
    }

    /// Whether the element `e` lies in this ideal.
    pub fn contains_element(&self, e: &RingElement) -> bool {
        match (self, e) {
            (RIdeal::Int(g), RingElement::Int(x)) => {
                if *g == 0 {
                    *x == 0
                } else {
                    x.unsigned_abs() % g == 0
                }
            }
            (RIdeal::Mod(d), RingElement::Mod(v)) => v % d == 0,
            (RIdeal::Product(is), RingElement::Tuple(xs)) if is.len() == xs.len() => {
                is.iter().zip(xs).all(|(i, x)| i.contains_element(x))
            }
            _ => panic!("ideal/element shape mismatch in contains_element"),
        }
    }

    /// Whether this ideal is the zero ideal of its ring shape.
    pub fn is_zero_in(&self, spec: &RingSpec) -> bool {
        *self == spec.zero_ideal()
    }

    /// Membership of this ideal in the basic open set determined by the
    /// finite element set `f_set`: true iff every listed element lies in the
    /// ideal (vacuously true for an empty set).
    pub fn in_basic_open(&self, f_set: &[RingElement]) -> bool {
        f_set.iter().all(|e| self.contains_element(e))
    }

    /// Human-readable form in the context of `spec`, e.g. `2Z`, `(4) in
    /// Z/12`, `2Z (+) 3Z`.
    pub fn render(&self, spec: &RingSpec) -> String {
        match (self, spec) {
            (RIdeal::Int(0), RingSpec::Z) => "0".to_string(),
            (RIdeal::Int(1), RingSpec::Z) => "Z".to_string(),
            (RIdeal::Int(g), RingSpec::Z) => format!("{g}Z"),
            (RIdeal::Mod(d), RingSpec::Zmod(n)) => {
                if d == n {
                    format!("0 in Z/{n}")
                } else if *d == 1 {
                    format!("Z/{n}")
                } else {
                    format!("({d}) in Z/{n}")
                }
            }
            (RIdeal::Product(is), RingSpec::Product(fs)) if is.len() == fs.len() => {
                let parts: Vec<String> = is.iter().zip(fs).map(|(i, s)| i.render(s)).collect();
                parts.join(" (+) ")
            }
            _ => format!("{self}"),
        }
    }
}
