//! Symbolic timing expressions over named parameters and natural constants,
//! closed under `+`, `-`, `*` and `max`.
//!
//! Two expressions denote the same timing constraint iff their canonical
//! normal forms ([`NormalExpr`]) are identical. The normal form is a
//! polynomial with integer coefficients over atoms, where an atom is either
//! a parameter name or a canonicalized `max(...)` node. Sums are combined
//! (`tRCD + 0` equals `tRCD`, `tRCD + tRCD` equals `2*tRCD`), products are
//! distributed over sums, and `max` arguments are flattened, deduplicated
//! and sorted. `max` is deliberately *not* distributed over `+`, so
//! `max(a, b) + c` and `max(a + c, b + c)` remain distinct.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::{Error, Result};

/// A timing expression as written in a model file.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum TimingExpr {
    Const(u64),
    Param(String),
    Add(Box<TimingExpr>, Box<TimingExpr>),
    Sub(Box<TimingExpr>, Box<TimingExpr>),
    Mul(Box<TimingExpr>, Box<TimingExpr>),
    Max(Vec<TimingExpr>),
}

impl TimingExpr {
    pub fn param(name: &str) -> Self {
        TimingExpr::Param(name.to_string())
    }

    /// Every parameter name mentioned anywhere in the expression.
    pub fn params(&self) -> Vec<String> {
        let mut out = Vec::new();
        self.collect_params(&mut out);
        out.sort();
        out.dedup();
        out
    }

    fn collect_params(&self, out: &mut Vec<String>) {
        match self {
            TimingExpr::Const(_) => {}
            TimingExpr::Param(p) => out.push(p.clone()),
            TimingExpr::Add(a, b) | TimingExpr::Sub(a, b) | TimingExpr::Mul(a, b) => {
                a.collect_params(out);
                b.collect_params(out);
            }
            TimingExpr::Max(args) => {
                for a in args {
                    a.collect_params(out);
                }
            }
        }
    }

    /// Evaluates against a full parameter binding. Intermediate values are
    /// signed so `tRAS - tRP` style differences work; the caller decides
    /// what final range is admissible.
    pub fn eval(&self, bind: &dyn Fn(&str) -> Option<u64>) -> Result<i128> {
        Ok(match self {
            TimingExpr::Const(c) => *c as i128,
            TimingExpr::Param(p) => {
                bind(p).ok_or_else(|| Error::UnboundParam(p.clone()))? as i128
            }
            TimingExpr::Add(a, b) => a.eval(bind)? + b.eval(bind)?,
            TimingExpr::Sub(a, b) => a.eval(bind)? - b.eval(bind)?,
            TimingExpr::Mul(a, b) => a.eval(bind)? * b.eval(bind)?,
            TimingExpr::Max(args) => {
                let mut best = i128::MIN;
                for a in args {
                    best = best.max(a.eval(bind)?);
                }
                best
            }
        })
    }

    /// Evaluates and checks the result is a natural number `>= min`.
    pub fn eval_nat(&self, bind: &dyn Fn(&str) -> Option<u64>, min: u64) -> Result<u64> {
        let v = self.eval(bind)?;
        if v < min as i128 || v > u64::MAX as i128 {
            return Err(Error::ExprOutOfRange {
                expr: self.to_string(),
                value: v,
                min: min as i128,
            });
        }
        Ok(v as u64)
    }

    pub fn normalize(&self) -> NormalExpr {
        match self {
            TimingExpr::Const(c) => NormalExpr::constant(*c as i64),
            TimingExpr::Param(p) => NormalExpr::atom(Atom::Param(p.clone())),
            TimingExpr::Add(a, b) => a.normalize().add(&b.normalize()),
            TimingExpr::Sub(a, b) => a.normalize().add(&b.normalize().scale(-1)),
            TimingExpr::Mul(a, b) => a.normalize().mul(&b.normalize()),
            TimingExpr::Max(args) => NormalExpr::max_of(args.iter().map(|a| a.normalize())),
        }
    }
}

// Printing must round-trip through the expression grammar, so right-nested
// additive chains and additive children of `*` get explicit parentheses.
impl fmt::Display for TimingExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fn additive(e: &TimingExpr) -> bool {
            matches!(e, TimingExpr::Add(..) | TimingExpr::Sub(..))
        }
        fn in_parens(f: &mut fmt::Formatter<'_>, e: &TimingExpr, cond: bool) -> fmt::Result {
            if cond {
                write!(f, "({e})")
            } else {
                write!(f, "{e}")
            }
        }
        match self {
            TimingExpr::Const(c) => write!(f, "{c}"),
            TimingExpr::Param(p) => write!(f, "{p}"),
            TimingExpr::Add(a, b) => {
                write!(f, "{a} + ")?;
                in_parens(f, b, additive(b))
            }
            TimingExpr::Sub(a, b) => {
                write!(f, "{a} - ")?;
                in_parens(f, b, additive(b))
            }
            TimingExpr::Mul(a, b) => {
                in_parens(f, a, additive(a) || matches!(**a, TimingExpr::Mul(..)))?;
                write!(f, " * ")?;
                in_parens(f, b, additive(b) || matches!(**b, TimingExpr::Mul(..)))
            }
            TimingExpr::Max(args) => {
                write!(f, "max(")?;
                for (i, a) in args.iter().enumerate() {
                    if i > 0 {
                        write!(f, ", ")?;
                    }
                    write!(f, "{a}")?;
                }
                write!(f, ")")
            }
        }
    }
}

/// An irreducible factor of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Atom {
    Param(String),
    /// Flattened, deduplicated, sorted; always at least two distinct args.
    Max(Vec<NormalExpr>),
}

/// Sorted product of atoms; empty means the constant monomial.
pub type Monomial = Vec<Atom>;

/// Canonical normal form: monomial -> nonzero integer coefficient.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct NormalExpr {
    terms: BTreeMap<Monomial, i64>,
}

impl NormalExpr {
    fn constant(c: i64) -> Self {
        let mut terms = BTreeMap::new();
        if c != 0 {
            terms.insert(Vec::new(), c);
        }
        NormalExpr { terms }
    }

    fn atom(a: Atom) -> Self {
        let mut terms = BTreeMap::new();
        terms.insert(vec![a], 1);
        NormalExpr { terms }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// The constant value, if the expression has no symbolic part.
    pub fn as_const(&self) -> Option<i64> {
        match self.terms.len() {
            0 => Some(0),
            1 => self.terms.get(&Vec::new() as &Monomial).copied(),
            _ => None,
        }
    }

    fn add(&self, other: &NormalExpr) -> NormalExpr {
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let entry = terms.entry(m.clone()).or_insert(0);
            *entry += c;
            if *entry == 0 {
                terms.remove(m);
            }
        }
        NormalExpr { terms }
    }

    fn scale(&self, k: i64) -> NormalExpr {
        if k == 0 {
            return NormalExpr::default();
        }
        NormalExpr {
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    fn mul(&self, other: &NormalExpr) -> NormalExpr {
        let mut out = NormalExpr::default();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                let mut m = ma.clone();
                m.extend(mb.iter().cloned());
                m.sort();
                let entry = out.terms.entry(m).or_insert(0);
                *entry += ca * cb;
                if *entry == 0 {
                    let key: Vec<Atom> = {
                        let mut k = ma.clone();
                        k.extend(mb.iter().cloned());
                        k.sort();
                        k
                    };
                    out.terms.remove(&key);
                }
            }
        }
        out
    }

    fn max_of<I: IntoIterator<Item = NormalExpr>>(args: I) -> NormalExpr {
        let mut flat: Vec<NormalExpr> = Vec::new();
        for arg in args {
            // max is associative: splice nested max atoms back in.
            if let Some(inner) = arg.as_bare_max() {
                flat.extend(inner.iter().cloned());
            } else {
                flat.push(arg);
            }
        }
        flat.sort();
        flat.dedup();
        if flat.len() == 1 {
            return flat.into_iter().next().unwrap();
        }
        if let Some(consts) = flat
            .iter()
            .map(NormalExpr::as_const)
            .collect::<Option<Vec<_>>>()
        {
            return NormalExpr::constant(consts.into_iter().max().unwrap_or(0));
        }
        NormalExpr::atom(Atom::Max(flat))
    }

    /// `Some(args)` iff the expression is exactly one `max(...)` atom.
    fn as_bare_max(&self) -> Option<&[NormalExpr]> {
        if self.terms.len() != 1 {
            return None;
        }
        let (m, c) = self.terms.iter().next().unwrap();
        if *c != 1 || m.len() != 1 {
            return None;
        }
        match &m[0] {
            Atom::Max(args) => Some(args),
            Atom::Param(_) => None,
        }
    }

    pub fn params(&self) -> Vec<String> {
        fn walk(e: &NormalExpr, out: &mut Vec<String>) {
            for m in e.terms.keys() {
                for atom in m {
                    match atom {
                        Atom::Param(p) => out.push(p.clone()),
                        Atom::Max(args) => {
                            for a in args {
                                walk(a, out);
                            }
                        }
                    }
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out.sort();
        out.dedup();
        out
    }
}

impl fmt::Display for NormalExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        fn monomial_str(m: &Monomial) -> String {
            m.iter()
                .map(|a| match a {
                    Atom::Param(p) => p.clone(),
                    Atom::Max(args) => format!(
                        "max({})",
                        args.iter()
                            .map(|e| e.to_string())
                            .collect::<Vec<_>>()
                            .join(", ")
                    ),
                })
                .collect::<Vec<_>>()
                .join("*")
        }
        // Symbolic terms in map order, constant term last.
        let mut first = true;
        let mut write_term = |f: &mut fmt::Formatter<'_>, text: String, coef: i64| {
            let sign = if coef < 0 { "-" } else { "+" };
            if first {
                first = false;
                if coef < 0 {
                    write!(f, "-{text}")
                } else {
                    write!(f, "{text}")
                }
            } else {
                write!(f, " {sign} {text}")
            }
        };
        for (m, c) in &self.terms {
            if m.is_empty() {
                continue;
            }
            let base = monomial_str(m);
            let text = if c.abs() == 1 {
                base
            } else {
                format!("{}*{}", c.abs(), base)
            };
            write_term(f, text, *c)?;
        }
        if let Some(c) = self.terms.get(&Vec::new() as &Monomial) {
            write_term(f, c.abs().to_string(), *c)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(name: &str) -> TimingExpr {
        TimingExpr::param(name)
    }

    fn add(a: TimingExpr, b: TimingExpr) -> TimingExpr {
        TimingExpr::Add(Box::new(a), Box::new(b))
    }

    fn sub(a: TimingExpr, b: TimingExpr) -> TimingExpr {
        TimingExpr::Sub(Box::new(a), Box::new(b))
    }

    fn mul(a: TimingExpr, b: TimingExpr) -> TimingExpr {
        TimingExpr::Mul(Box::new(a), Box::new(b))
    }

    #[test]
    fn plus_zero_is_identity() {
        assert_eq!(
            add(p("tRCD"), TimingExpr::Const(0)).normalize(),
            p("tRCD").normalize()
        );
    }

    #[test]
    fn doubling_matches_coefficient_two() {
        assert_eq!(
            add(p("tRCD"), p("tRCD")).normalize(),
            mul(TimingExpr::Const(2), p("tRCD")).normalize()
        );
    }

    #[test]
    fn subtraction_cancels() {
        let e = sub(add(p("tRAS"), p("tRP")), p("tRP"));
        assert_eq!(e.normalize(), p("tRAS").normalize());
    }

    #[test]
    fn max_is_commutative_and_idempotent() {
        let ab = TimingExpr::Max(vec![p("a"), p("b")]).normalize();
        let ba = TimingExpr::Max(vec![p("b"), p("a")]).normalize();
        assert_eq!(ab, ba);
        let aa = TimingExpr::Max(vec![p("a"), p("a")]).normalize();
        assert_eq!(aa, p("a").normalize());
    }

    #[test]
    fn nested_max_flattens() {
        let nested = TimingExpr::Max(vec![TimingExpr::Max(vec![p("a"), p("b")]), p("c")]);
        let flat = TimingExpr::Max(vec![p("a"), p("b"), p("c")]);
        assert_eq!(nested.normalize(), flat.normalize());
    }

    #[test]
    fn max_not_distributed_over_sum() {
        let lhs = add(TimingExpr::Max(vec![p("a"), p("b")]), p("c")).normalize();
        let rhs = TimingExpr::Max(vec![add(p("a"), p("c")), add(p("b"), p("c"))]).normalize();
        assert_ne!(lhs, rhs);
    }

    #[test]
    fn distributes_product_over_sum() {
        // 2 * (a + b) == 2a + 2b
        let lhs = mul(TimingExpr::Const(2), add(p("a"), p("b"))).normalize();
        let rhs = add(
            mul(TimingExpr::Const(2), p("a")),
            mul(TimingExpr::Const(2), p("b")),
        )
        .normalize();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn eval_with_bindings() {
        let e = TimingExpr::Max(vec![sub(p("tRAS"), p("tRP")), TimingExpr::Const(2)]);
        let bind = |name: &str| match name {
            "tRAS" => Some(9u64),
            "tRP" => Some(3),
            _ => None,
        };
        assert_eq!(e.eval(&bind).unwrap(), 6);
        assert!(matches!(
            p("tBAD").eval(&bind),
            Err(Error::UnboundParam(name)) if name == "tBAD"
        ));
    }

    #[test]
    fn eval_nat_rejects_zero_delay() {
        let e = sub(p("a"), p("a"));
        let bind = |_: &str| Some(5u64);
        assert!(matches!(
            e.eval_nat(&bind, 1),
            Err(Error::ExprOutOfRange { value: 0, .. })
        ));
    }

    #[test]
    fn display_round_trip_shapes() {
        // Right-nested subtraction keeps parentheses so the string re-parses
        // to the same tree shape.
        let e = add(p("a"), sub(p("b"), p("c")));
        assert_eq!(e.to_string(), "a + (b - c)");
        let m = mul(add(p("a"), p("b")), TimingExpr::Const(3));
        assert_eq!(m.to_string(), "(a + b) * 3");
    }

    #[test]
    fn normal_form_display_is_stable() {
        let e = add(add(p("b"), p("a")), TimingExpr::Const(4));
        assert_eq!(e.normalize().to_string(), "a + b + 4");
        let neg = sub(TimingExpr::Const(0), p("a"));
        assert_eq!(neg.normalize().to_string(), "-a");
    }
}
