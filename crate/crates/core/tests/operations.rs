//! Worked examples for the public operations, written as text where possible.

use su21_invariants::clifford::{c_word, chevalley, filtration_degree};
use su21_invariants::enveloping::{self, UElement};
use su21_invariants::invariants::{self, ideal_slice_check, st_labels, verify_extp_decomposition};
use su21_invariants::lie::Basis;
use su21_invariants::linear::q;
use su21_invariants::parse::{parse_element, Context, Element};
use su21_invariants::sym::{self, ExtMonomial, SymTensorElement};
use su21_invariants::ugcp::{self, left_factor, tildes, UCElement};

use Basis::*;

fn uc(text: &str) -> UCElement {
    match parse_element(text, Context::Uc).unwrap() {
        Element::Uc(x) => x,
        other => panic!("unexpected {other:?}"),
    }
}

fn env(text: &str) -> UElement {
    match parse_element(text, Context::Enveloping).unwrap() {
        Element::Enveloping(x) => x,
        other => panic!("unexpected {other:?}"),
    }
}

fn tensor(text: &str) -> SymTensorElement {
    match parse_element(text, Context::Tensor).unwrap() {
        Element::Tensor(x) => x,
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn tilde_generators_as_written() {
    let t = tildes();
    let written = [
        ('a', "H1 + H2"),
        ('b', "H^2 + 2*(E*F + F*E)"),
        ('c', "E1*F1 + E2*F2"),
        ('d', "2*E*E2*F1 + H*E1*F1 - H*E2*F2 + 2*F*E1*F2"),
        ('e', "F1 (x) E1 + F2 (x) E2"),
        ('f', "E1 (x) F1 + E2 (x) F2"),
        ('g', "1 (x) (E1*F1 + E2*F2)"),
        ('h', "(2*E*E2 + H*E1) (x) F1 + (-H*E2 + 2*F*E1) (x) F2"),
        ('i', "2*E (x) E2*F1 + H (x) E1*F1 - H (x) E2*F2 + 2*F (x) E1*F2"),
        ('j', "(H*F1 + 2*F*F2) (x) E1 + (2*E*F1 - H*F2) (x) E2"),
    ];
    for (name, text) in written {
        assert_eq!(t.by_name(name), &uc(text), "{name}~");
        assert!(ugcp::is_k_invariant(&uc(text)), "{name}~ invariant");
    }
    assert_eq!(t.dirac, uc("E1 (x) F1 + E2 (x) F2 + F1 (x) E1 + F2 (x) E2"));
}

#[test]
fn casimir_as_written() {
    let omega = env("1/2*(H1 - H2)^2 + 3/2*(H1 + H2)^2 + E*F + F*E + E1*F1 + E2*F2 + F1*E1 + F2*E2");
    assert_eq!(enveloping::casimir_omega(), omega);

    let t = tildes();
    let via = t.word("aa").scale(&q(3, 2)) + t.by_name('b').scale(&q(1, 2)) + t.by_name('c').scale(&q(2, 1))
        - t.by_name('a').scale(&q(3, 1));
    assert_eq!(left_factor(&via), Some(omega));
}

#[test]
fn cubic_as_written_is_central() {
    let a = env("H1 + H2");
    let b = env("H^2 + 2*(E*F + F*E)");
    let c = env("E1*F1 + E2*F2");
    let d = env("2*E*E2*F1 + H*E1*F1 - H*E2*F2 + 2*F*E1*F2");
    let cub = a.pow(3).scale(&q(-3, 2)) + a.product(&b).scale(&q(3, 2)) - a.product(&c).scale(&q(3, 1))
        + a.pow(2).scale(&q(9, 2))
        - a.scale(&q(3, 1))
        + d.scale(&q(3, 1))
        - b.scale(&q(3, 2));
    assert!(enveloping::is_central(&cub));
    assert!(enveloping::u_var(F1).commutator(&cub).is_zero());
}

#[test]
fn ordered_products() {
    assert_eq!(env("F*E"), env("E*F - H1 + H2"));
    assert_eq!(env("F1*E1"), env("E1*F1 - 2*H1 - H2"));
    assert_eq!(env("H2*H1"), env("H1*H2"));
}

#[test]
fn four_wedge_leading_term() {
    let w = ExtMonomial::from_vars(&[E1, E2, F1, F2]);
    let tau = chevalley(w);
    let lower = &tau - &c_word(&[E1, E2, F1, F2]);
    assert_eq!(filtration_degree(&tau), Some(4));
    assert!(filtration_degree(&lower).is_none_or(|d| d < 4));
}

#[test]
fn highest_weight_vectors_are_killed_by_e() {
    assert!(sym::ad_basis(E, &tensor("E1^2*F2")).is_zero());
    assert!(sym::ad_basis(E, &tensor("1 (x) E1^^F2")).is_zero());
    assert_eq!(sym::ad_basis(H1, &tensor("1 (x) E1^^E2")), tensor("1 (x) E1^^E2"));
    assert_eq!(sym::ad_basis(E, &tensor("F^2")), tensor("2*(H1 - H2)*F"));
}

#[test]
fn s_t_products_in_degree_three() {
    let mut words: Vec<String> = st_labels(3)
        .into_iter()
        .map(|(s, t)| {
            let mut w = String::new();
            for (letter, n) in ['a', 'b', 'c', 'd'].into_iter().zip(s) {
                w.extend(std::iter::repeat_n(letter, n as usize));
            }
            if t != "1" {
                w.push_str(t);
            }
            w
        })
        .collect();
    words.sort();
    assert_eq!(words, ["aaa", "ab", "ac", "ae", "af", "ag", "d", "h", "i", "j"]);
}

#[test]
fn exterior_decomposition_and_lemmas() {
    assert!(verify_extp_decomposition().passed());
    for n in [2, 3, 6] {
        assert!(invariants::verify_lemma_sk(n).passed(), "S(k) degree {n}");
    }
    for n in [2, 3] {
        assert!(invariants::verify_lemma_sp(n).passed(), "S(p) degree {n}");
    }
}

#[test]
fn ideal_slice_small_bounds() {
    for bound in [2, 3] {
        let report = ideal_slice_check(bound);
        assert!(report.passed(), "{report}");
    }
}
