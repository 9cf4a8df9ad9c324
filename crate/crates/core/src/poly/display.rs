use std::cmp::Ordering;
use std::fmt::Write;

use super::{Coefficient, Monomial, MultiPoly, PolyError};
use crate::numeric::Rational;

/// Order in which terms are printed.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum TermOrder {
    /// Descending graded lexicographic order.
    #[default]
    GradedLex,
    /// Classic computer-algebra display: descending total degree; within a
    /// degree the pure power of the first variable, then the pure power of
    /// the second, then mixed terms by ascending power of the first variable.
    Classic,
}

fn classic_rank(m: &Monomial) -> (u32, u32) {
    let deg = m.degree();
    let e = m.exps();
    match e {
        [x, ..] if *x == deg && deg > 0 => (0, 0),
        [_, y, ..] if *y == deg && deg > 0 => (1, 0),
        [x, ..] => (2, *x),
        [] => (0, 0),
    }
}

fn classic_cmp(a: &Monomial, b: &Monomial) -> Ordering {
    b.degree()
        .cmp(&a.degree())
        .then_with(|| classic_rank(a).cmp(&classic_rank(b)))
        .then_with(|| b.cmp(a))
}

impl<C: Coefficient> MultiPoly<C> {
    /// Terms in printing order.
    pub fn ordered_terms(&self, order: TermOrder) -> Vec<(&Monomial, &C)> {
        let mut terms: Vec<(&Monomial, &C)> = self.terms.iter().rev().collect();
        if order == TermOrder::Classic {
            terms.sort_by(|a, b| classic_cmp(a.0, b.0));
        }
        terms
    }

    /// Renders terms as `9x^8 + 36x^2y^6 - 14175`.
    pub fn to_text(&self, order: TermOrder) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let terms = self.ordered_terms(order);
        let mut out = String::new();
        for (i, (m, c)) in terms.into_iter().enumerate() {
            let (negative, mag) = c.term_parts();
            if i == 0 {
                if negative {
                    out.push('-');
                }
            } else {
                out.push_str(if negative { " - " } else { " + " });
            }
            let mut vars = String::new();
            for (name, &e) in self.vars.iter().zip(m.exps()) {
                match e {
                    0 => {}
                    1 => vars.push_str(name),
                    _ => {
                        let _ = write!(vars, "{name}^{e}");
                    }
                }
            }
            if vars.is_empty() {
                out.push_str(if mag.is_empty() { "1" } else { &mag });
            } else {
                out.push_str(&mag);
                out.push_str(&vars);
            }
        }
        out
    }
}

/// Parses text such as `9x^8 + 36x^2*y^6 - 14175` (optionally with rational
/// coefficients like `2/3 y`) over the given variables.
pub fn parse_rational_poly(vars: &[&str], text: &str) -> Result<MultiPoly<Rational>, PolyError> {
    let bytes: Vec<char> = text.chars().filter(|c| !c.is_whitespace() && *c != '*').collect();
    let err = |msg: &str| PolyError::Parse(format!("{msg} in {text:?}"));
    let mut pos = 0;
    let mut terms = Vec::new();
    let mut names: Vec<(usize, &str)> = vars.iter().copied().enumerate().collect();
    names.sort_by_key(|(_, n)| std::cmp::Reverse(n.len()));
    let read_int = |pos: &mut usize| -> Option<u64> {
        let start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        (start < *pos).then(|| bytes[start..*pos].iter().collect::<String>().parse().ok())?
    };
    let read_digits = |pos: &mut usize| -> Option<String> {
        let start = *pos;
        while *pos < bytes.len() && bytes[*pos].is_ascii_digit() {
            *pos += 1;
        }
        (start < *pos).then(|| bytes[start..*pos].iter().collect())
    };
    if bytes.is_empty() {
        return Err(err("empty input"));
    }
    while pos < bytes.len() {
        let mut negative = false;
        match bytes[pos] {
            '+' => pos += 1,
            '-' | '−' => {
                negative = true;
                pos += 1;
            }
            _ if pos != 0 => return Err(err("expected '+' or '-'")),
            _ => {}
        }
        let mut coeff = Rational::one();
        let mut have_coeff = false;
        if let Some(num) = read_digits(&mut pos) {
            let mut lit = num;
            if pos < bytes.len() && bytes[pos] == '/' {
                pos += 1;
                let den = read_digits(&mut pos).ok_or_else(|| err("bad denominator"))?;
                lit = format!("{lit}/{den}");
            }
            coeff = lit.parse().map_err(|_| err("bad coefficient"))?;
            have_coeff = true;
        }
        let mut exps = vec![0u32; vars.len()];
        let mut have_var = false;
        loop {
            let rest: String = bytes[pos..].iter().collect();
            let Some(&(idx, name)) = names.iter().find(|(_, n)| rest.starts_with(n)) else {
                break;
            };
            pos += name.chars().count();
            let mut e = 1u32;
            if pos < bytes.len() && bytes[pos] == '^' {
                pos += 1;
                e = read_int(&mut pos).ok_or_else(|| err("bad exponent"))? as u32;
            }
            exps[idx] += e;
            have_var = true;
        }
        if !have_coeff && !have_var {
            return Err(err("empty term"));
        }
        if negative {
            coeff = -coeff;
        }
        terms.push((exps, coeff));
    }
    Ok(MultiPoly::from_terms(vars, terms))
}
