//! Canonical text form of algebra elements.
//!
//! The output is accepted by [`crate::parse`] in the matching context:
//! `*` for products, `^` for powers, `^^` for wedges, `(x)` between tensor
//! factors and `p/q` for rationals.

use std::fmt;

use num::{One, Signed};

use crate::clifford::{CliffMonomial, ExtElement};
use crate::enveloping::PbwMonomial;
use crate::linear::{fmt_scalar, Combination};
use crate::sym::{ExtMonomial, SymKey, SymMonomial};
use crate::ugcp::UCKey;

/// A key that can be written as a product of generators.
pub trait KeyText: Ord + Clone {
    /// Text of the key, or `None` for the unit monomial.
    fn text(&self) -> Option<String>;
    fn degree(&self) -> usize;
}

fn powers(exps: &[u8; 8]) -> Option<String> {
    let parts: Vec<String> = crate::lie::Basis::ALL
        .iter()
        .filter(|b| exps[b.index()] > 0)
        .map(|b| match exps[b.index()] {
            1 => b.symbol().to_string(),
            n => format!("{}^{n}", b.symbol()),
        })
        .collect();
    (!parts.is_empty()).then(|| parts.join("*"))
}

fn joined(factors: Vec<crate::lie::Basis>, sep: &str) -> Option<String> {
    (!factors.is_empty()).then(|| factors.iter().map(|b| b.symbol()).collect::<Vec<_>>().join(sep))
}

impl KeyText for SymMonomial {
    fn degree(&self) -> usize {
        SymMonomial::degree(self)
    }

    fn text(&self) -> Option<String> {
        powers(&self.0)
    }
}

impl KeyText for PbwMonomial {
    fn degree(&self) -> usize {
        PbwMonomial::degree(self)
    }

    fn text(&self) -> Option<String> {
        powers(&self.0)
    }
}

impl KeyText for ExtMonomial {
    fn degree(&self) -> usize {
        ExtMonomial::degree(self)
    }

    fn text(&self) -> Option<String> {
        joined(self.factors(), "^^")
    }
}

impl KeyText for CliffMonomial {
    fn degree(&self) -> usize {
        CliffMonomial::degree(self)
    }

    fn text(&self) -> Option<String> {
        joined(self.factors(), "*")
    }
}

fn tensor_text(left: Option<String>, right: Option<String>) -> Option<String> {
    match (left, right) {
        (l, None) => l,
        (None, Some(r)) => Some(format!("1 (x) {r}")),
        (Some(l), Some(r)) => Some(format!("{l} (x) {r}")),
    }
}

impl KeyText for SymKey {
    fn degree(&self) -> usize {
        SymKey::degree(self)
    }

    fn text(&self) -> Option<String> {
        tensor_text(self.sym.text(), self.ext.text())
    }
}

impl KeyText for UCKey {
    fn degree(&self) -> usize {
        self.u.degree() + self.c.degree()
    }

    fn text(&self) -> Option<String> {
        tensor_text(self.u.text(), self.c.text())
    }
}

/// Formats a combination as `c1*m1 + c2*m2 - ...`, highest degree first and
/// descending key order within a degree.
pub fn format<K: KeyText>(x: &Combination<K>) -> String {
    if x.is_zero() {
        return "0".to_string();
    }
    let mut terms: Vec<_> = x.iter().collect();
    terms.sort_by(|(a, _), (b, _)| b.degree().cmp(&a.degree()).then_with(|| b.cmp(a)));
    let mut out = String::new();
    for (i, (k, c)) in terms.into_iter().enumerate() {
        let neg = c.is_negative();
        let abs = c.abs();
        if i == 0 {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        match k.text() {
            None => out.push_str(&fmt_scalar(&abs)),
            Some(t) if abs.is_one() => out.push_str(&t),
            Some(t) => {
                out.push_str(&fmt_scalar(&abs));
                out.push('*');
                out.push_str(&t);
            }
        }
    }
    out
}

macro_rules! display_via_format {
    ($($k:ty),*) => {
        $(impl fmt::Display for Combination<$k> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                f.write_str(&format(self))
            }
        })*
    };
}

display_via_format!(SymKey, PbwMonomial, CliffMonomial, UCKey, ExtMonomial);

/// Exterior elements print as `1 (x) ...` so they parse back in the tensor context.
pub fn format_exterior(x: &ExtElement) -> String {
    format(&x.map_keys(|m| SymKey::new(SymMonomial::one(), *m)))
}
