//! Jet-equation generation: truncated-series expansion of polynomials
//! (f into f^(0), ..., f^(m)) and the matrix-power jet ideals, over exact
//! integer coefficients with canonical, byte-stable output.

use crate::error::{Error, Result};
use serde_json::{json, Value};
use std::collections::BTreeMap;
use std::fmt;

/// A jet variable: base variable index and jet level.
pub type Key = (u32, u32);

/// A monomial: sorted (key, exponent) pairs, exponents positive.
pub type Monomial = Vec<(Key, u32)>;

/// Base-variable names; key (i, j) renders as `names[i]_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VarSet {
    names: Vec<String>,
}

impl VarSet {
    pub fn new(names: Vec<String>) -> Self {
        VarSet { names }
    }

    /// n names "x1".."xn".
    pub fn numbered(n: usize) -> Self {
        VarSet {
            names: (1..=n).map(|i| format!("x{i}")).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn name(&self, base: u32) -> &str {
        &self.names[base as usize]
    }

}

/// Sparse polynomial in jet variables with integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct JetPolynomial {
    terms: BTreeMap<Monomial, i64>,
}

fn monomial_degree(m: &Monomial) -> u32 {
    m.iter().map(|&(_, e)| e).sum()
}

/// Graded-lex comparison used for canonical term listings: higher degree
/// first, then lexicographic on exponent vectors (earlier keys more
/// significant, larger exponent first).
fn term_order(a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
    use std::cmp::Ordering;
    match monomial_degree(b).cmp(&monomial_degree(a)) {
        Ordering::Equal => {}
        other => return other,
    }
    let (mut ia, mut ib) = (a.iter().peekable(), b.iter().peekable());
    loop {
        match (ia.peek(), ib.peek()) {
            (Some(&&(ka, ea)), Some(&&(kb, eb))) => {
                if ka < kb {
                    return Ordering::Less; // a has the earlier key: a is larger
                }
                if kb < ka {
                    return Ordering::Greater;
                }
                if ea != eb {
                    return eb.cmp(&ea);
                }
                ia.next();
                ib.next();
            }
            (Some(_), None) => return Ordering::Less,
            (None, Some(_)) => return Ordering::Greater,
            (None, None) => return Ordering::Equal,
        }
    }
}

impl JetPolynomial {
    pub fn zero() -> Self {
        JetPolynomial::default()
    }

    pub fn constant(c: i64) -> Self {
        let mut p = JetPolynomial::zero();
        if c != 0 {
            p.terms.insert(Vec::new(), c);
        }
        p
    }

    pub fn variable(base: u32, level: u32) -> Self {
        let mut p = JetPolynomial::zero();
        p.terms.insert(vec![((base, level), 1)], 1);
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn insert(&mut self, m: Monomial, c: i64) {
        if c == 0 {
            return;
        }
        let entry = self.terms.entry(m).or_insert(0);
        *entry += c;
        if *entry == 0 {
            let key = self
                .terms
                .iter()
                .find(|(_, &v)| v == 0)
                .map(|(k, _)| k.clone());
            if let Some(k) = key {
                self.terms.remove(&k);
            }
        }
    }

    pub fn add(&self, other: &JetPolynomial) -> JetPolynomial {
        let mut out = self.clone();
        for (m, &c) in &other.terms {
            out.insert(m.clone(), c);
        }
        out
    }

    pub fn neg(&self) -> JetPolynomial {
        JetPolynomial {
            terms: self.terms.iter().map(|(m, &c)| (m.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &JetPolynomial) -> JetPolynomial {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &JetPolynomial) -> JetPolynomial {
        let mut out = JetPolynomial::zero();
        for (ma, &ca) in &self.terms {
            for (mb, &cb) in &other.terms {
                out.insert(mul_monomials(ma, mb), ca * cb);
            }
        }
        out
    }

    pub fn scale(&self, c: i64) -> JetPolynomial {
        if c == 0 {
            return JetPolynomial::zero();
        }
        JetPolynomial {
            terms: self.terms.iter().map(|(m, &v)| (m.clone(), v * c)).collect(),
        }
    }

    pub fn pow(&self, e: u32) -> JetPolynomial {
        let mut out = JetPolynomial::constant(1);
        for _ in 0..e {
            out = out.mul(self);
        }
        out
    }

    /// Total degree of each term if they all agree.
    pub fn homogeneous_degree(&self) -> Option<u32> {
        let mut degs = self.terms.keys().map(monomial_degree);
        let first = degs.next()?;
        degs.all(|d| d == first).then_some(first)
    }

    /// Sum over terms of coeff * product of assigned values; exact i128.
    pub fn eval(&self, assign: &dyn Fn(Key) -> i128) -> i128 {
        self.terms
            .iter()
            .map(|(m, &c)| {
                m.iter().fold(i128::from(c), |acc, &(k, e)| {
                    acc * assign(k).pow(e)
                })
            })
            .sum()
    }

    /// Highest jet level appearing.
    pub fn max_level(&self) -> u32 {
        self.terms
            .keys()
            .flat_map(|m| m.iter().map(|&((_, j), _)| j))
            .max()
            .unwrap_or(0)
    }

    /// Canonical text: terms in graded-lex order, variables as `name_level`.
    pub fn render(&self, vars: &VarSet) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let mut terms: Vec<(&Monomial, i64)> =
            self.terms.iter().map(|(m, &c)| (m, c)).collect();
        terms.sort_by(|a, b| term_order(a.0, b.0));
        let mut out = String::new();
        for (i, (m, c)) in terms.iter().enumerate() {
            let mag = c.unsigned_abs();
            if i == 0 {
                if *c < 0 {
                    out.push('-');
                }
            } else {
                out.push_str(if *c < 0 { " - " } else { " + " });
            }
            let mut pieces = Vec::new();
            if mag != 1 || m.is_empty() {
                pieces.push(mag.to_string());
            }
            for &((base, level), e) in m.iter() {
                let v = format!("{}_{}", vars.name(base), level);
                pieces.push(if e == 1 { v } else { format!("{v}^{e}") });
            }
            out.push_str(&pieces.join("*"));
        }
        out
    }

    /// Machine form: list of {coeff, vars: [[base, level, exp]]} in the same
    /// canonical order as `render`.
    pub fn to_json(&self, vars: &VarSet) -> Value {
        let mut terms: Vec<(&Monomial, i64)> =
            self.terms.iter().map(|(m, &c)| (m, c)).collect();
        terms.sort_by(|a, b| term_order(a.0, b.0));
        json!({
            "terms": terms
                .iter()
                .map(|(m, c)| {
                    json!({
                        "coeff": c,
                        "vars": m
                            .iter()
                            .map(|&((base, level), e)| {
                                json!({
                                    "name": vars.name(base),
                                    "base": base,
                                    "level": level,
                                    "exp": e,
                                })
                            })
                            .collect::<Vec<_>>(),
                    })
                })
                .collect::<Vec<_>>(),
        })
    }
}

fn mul_monomials(a: &Monomial, b: &Monomial) -> Monomial {
    let mut map: BTreeMap<Key, u32> = BTreeMap::new();
    for &(k, e) in a.iter().chain(b.iter()) {
        *map.entry(k).or_insert(0) += e;
    }
    map.into_iter().collect()
}

/// Expands f (in level-0 variables) along the substitution
/// x_i -> sum_j x_i^(j) t^j, truncated past t^m; entry j of the result is
/// the coefficient polynomial of t^j.
pub fn jet_expand(f: &JetPolynomial, m: u32) -> Result<Vec<JetPolynomial>> {
    if f.max_level() > 0 {
        return Err(Error::Domain(
            "jet expansion starts from a level-0 polynomial".into(),
        ));
    }
    let len = m as usize + 1;
    let mut out = vec![JetPolynomial::zero(); len];
    for (mono, &c) in &f.terms {
        // Truncated product of the series of each variable power.
        let mut series = vec![JetPolynomial::zero(); len];
        series[0] = JetPolynomial::constant(c);
        for &((base, _), e) in mono.iter() {
            for _ in 0..e {
                let mut next = vec![JetPolynomial::zero(); len];
                for (j, acc) in series.iter().enumerate() {
                    if acc.is_zero() {
                        continue;
                    }
                    for k in 0..len - j {
                        let prod = acc.mul(&JetPolynomial::variable(base, k as u32));
                        next[j + k] = next[j + k].add(&prod);
                    }
                }
                series = next;
            }
        }
        for (j, s) in series.into_iter().enumerate() {
            out[j] = out[j].add(&s);
        }
    }
    Ok(out)
}

/// The jet ideal of the matrix equation X^d = 0 for the generic n x n
/// matrix (trace-free when `traceless`, eliminating the last diagonal
/// entry), expanded to jet order m; for d = 3 the generator tr(X^2) is
/// appended, matching the known defining equations of the corresponding
/// orbit closures. Returns the variable set and the generators.
pub fn matrix_power_jet_ideal(
    n: usize,
    d: u32,
    m: u32,
    traceless: bool,
) -> Result<(VarSet, Vec<JetPolynomial>)> {
    if n < 2 {
        return Err(Error::Domain("matrix size must be at least 2".into()));
    }
    if !(2..=3).contains(&d) {
        return Err(Error::Domain(
            "only squares and cubes of the generic matrix are supported".into(),
        ));
    }
    // Entry (i, j) (0-based) is base variable i*n + j, named x{i*n+j+1}.
    let vars = VarSet::numbered(n * n);
    let entry = |i: usize, j: usize| -> JetPolynomial {
        if traceless && i == n - 1 && j == n - 1 {
            // x_nn = -(x_11 + ... + x_{n-1,n-1}).
            let mut p = JetPolynomial::zero();
            for k in 0..n - 1 {
                p = p.sub(&JetPolynomial::variable((k * n + k) as u32, 0));
            }
            p
        } else {
            JetPolynomial::variable((i * n + j) as u32, 0)
        }
    };
    let x: Vec<Vec<JetPolynomial>> = (0..n)
        .map(|i| (0..n).map(|j| entry(i, j)).collect())
        .collect();
    let mat_mul = |a: &[Vec<JetPolynomial>], b: &[Vec<JetPolynomial>]| -> Vec<Vec<JetPolynomial>> {
        (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| {
                        (0..n).fold(JetPolynomial::zero(), |acc, k| {
                            acc.add(&a[i][k].mul(&b[k][j]))
                        })
                    })
                    .collect()
            })
            .collect()
    };
    let x2 = mat_mul(&x, &x);
    let power = if d == 2 { x2.clone() } else { mat_mul(&x2, &x) };
    let mut gens = Vec::new();
    for row in &power {
        for p in row {
            gens.extend(jet_expand(p, m)?);
        }
    }
    if d == 3 {
        let trace_sq = (0..n).fold(JetPolynomial::zero(), |acc, i| acc.add(&x2[i][i]));
        gens.extend(jet_expand(&trace_sq, m)?);
    }
    gens.retain(|g| !g.is_zero());
    Ok((vars, gens))
}

/// Minimal total degree among homogeneous generators.
pub fn homogeneous_min_degree(gens: &[JetPolynomial]) -> Result<u32> {
    let mut min = None;
    for g in gens {
        if g.is_zero() {
            continue;
        }
        let d = g
            .homogeneous_degree()
            .ok_or_else(|| Error::Domain("generator is not homogeneous".into()))?;
        min = Some(min.map_or(d, |m: u32| m.min(d)));
    }
    min.ok_or_else(|| Error::Domain("no nonzero generators".into()))
}

/// Parses "+ - * ^ ( )" polynomial expressions with integer coefficients
/// and named variables; returns the polynomial (all variables at level 0)
/// and the variable set in order of first appearance.
pub fn parse_polynomial(src: &str) -> Result<(JetPolynomial, VarSet)> {
    let mut parser = Parser {
        tokens: tokenize(src)?,
        pos: 0,
        names: Vec::new(),
    };
    let poly = parser.expr()?;
    if parser.pos != parser.tokens.len() {
        return Err(Error::Parse(format!("unexpected trailing input in {src:?}")));
    }
    Ok((poly, VarSet::new(parser.names)))
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Num(i64),
    Ident(String),
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
}

fn tokenize(src: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    let mut chars = src.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            ' ' | '\t' => {
                chars.next();
            }
            '+' => {
                chars.next();
                out.push(Token::Plus);
            }
            '-' => {
                chars.next();
                out.push(Token::Minus);
            }
            '*' => {
                chars.next();
                out.push(Token::Star);
            }
            '^' => {
                chars.next();
                out.push(Token::Caret);
            }
            '(' => {
                chars.next();
                out.push(Token::LParen);
            }
            ')' => {
                chars.next();
                out.push(Token::RParen);
            }
            '0'..='9' => {
                let mut n: i64 = 0;
                while let Some(d) = chars.peek().and_then(|c| c.to_digit(10)) {
                    n = n * 10 + i64::from(d);
                    chars.next();
                }
                out.push(Token::Num(n));
            }
            c if c.is_ascii_alphabetic() => {
                let mut name = String::new();
                while let Some(&c) = chars.peek() {
                    if c.is_ascii_alphanumeric() {
                        name.push(c);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Ident(name));
            }
            other => {
                return Err(Error::Parse(format!(
                    "unexpected character {other:?} in polynomial"
                )))
            }
        }
    }
    Ok(out)
}

struct Parser {
    tokens: Vec<Token>,
    pos: usize,
    names: Vec<String>,
}

impl Parser {
    fn peek(&self) -> Option<&Token> {
        self.tokens.get(self.pos)
    }

    fn expr(&mut self) -> Result<JetPolynomial> {
        let mut acc = if self.peek() == Some(&Token::Minus) {
            self.pos += 1;
            self.term()?.neg()
        } else {
            self.term()?
        };
        loop {
            match self.peek() {
                Some(Token::Plus) => {
                    self.pos += 1;
                    acc = acc.add(&self.term()?);
                }
                Some(Token::Minus) => {
                    self.pos += 1;
                    acc = acc.sub(&self.term()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn term(&mut self) -> Result<JetPolynomial> {
        let mut acc = self.factor()?;
        loop {
            match self.peek() {
                Some(Token::Star) => {
                    self.pos += 1;
                    acc = acc.mul(&self.factor()?);
                }
                // Juxtaposition: "2x" or "x y".
                Some(Token::Ident(_)) | Some(Token::LParen) => {
                    acc = acc.mul(&self.factor()?);
                }
                _ => return Ok(acc),
            }
        }
    }

    fn factor(&mut self) -> Result<JetPolynomial> {
        let base = match self.peek().cloned() {
            Some(Token::Num(n)) => {
                self.pos += 1;
                JetPolynomial::constant(n)
            }
            Some(Token::Ident(name)) => {
                self.pos += 1;
                let idx = match self.names.iter().position(|n| *n == name) {
                    Some(i) => i,
                    None => {
                        self.names.push(name);
                        self.names.len() - 1
                    }
                };
                JetPolynomial::variable(idx as u32, 0)
            }
            Some(Token::LParen) => {
                self.pos += 1;
                let inner = self.expr()?;
                if self.peek() != Some(&Token::RParen) {
                    return Err(Error::Parse("unbalanced parentheses".into()));
                }
                self.pos += 1;
                inner
            }
            other => return Err(Error::Parse(format!("unexpected token {other:?}"))),
        };
        if self.peek() == Some(&Token::Caret) {
            self.pos += 1;
            match self.peek().cloned() {
                Some(Token::Num(e)) if e >= 0 => {
                    self.pos += 1;
                    Ok(base.pow(e as u32))
                }
                _ => Err(Error::Parse("exponent must be a nonnegative integer".into())),
            }
        } else {
            Ok(base)
        }
    }
}

impl fmt::Display for VarSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.names.join(","))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn expand_str(src: &str, m: u32) -> Vec<String> {
        let (f, vars) = parse_polynomial(src).unwrap();
        jet_expand(&f, m)
            .unwrap()
            .iter()
            .map(|p| p.render(&vars))
            .collect()
    }

    #[test]
    fn quadric_example() {
        assert_eq!(
            expand_str("x^2 + y*z", 1),
            vec!["x_0^2 + y_0*z_0", "2*x_0*x_1 + y_0*z_1 + y_1*z_0"]
        );
        assert_eq!(
            expand_str("x^2 + y*z", 2),
            vec![
                "x_0^2 + y_0*z_0",
                "2*x_0*x_1 + y_0*z_1 + y_1*z_0",
                "2*x_0*x_2 + x_1^2 + y_0*z_2 + y_1*z_1 + y_2*z_0",
            ]
        );
        assert_eq!(expand_str("x", 1), vec!["x_0", "x_1"]);
    }

    #[test]
    fn parser_and_rendering() {
        let (f, vars) = parse_polynomial("2x*y - 3*(x - y)^2 + 7").unwrap();
        assert_eq!(vars.len(), 2);
        // -3x^2 + 8xy - 3y^2 + 7.
        assert_eq!(
            f.render(&vars),
            "-3*x_0^2 + 8*x_0*y_0 - 3*y_0^2 + 7"
        );
        assert!(parse_polynomial("x +").is_err());
        assert!(parse_polynomial("x ^ y").is_err());
        let js = f.to_json(&vars);
        assert_eq!(js["terms"][0]["coeff"], -3);
    }

    #[test]
    fn matrix_square_order_one() {
        // X0^2 and X0X1 + X1X0 for the generic 4x4 matrix: their entries
        // are exactly the even/odd jet components of the entries of X^2.
        let (_, gens) = matrix_power_jet_ideal(4, 2, 1, false).unwrap();
        assert_eq!(gens.len(), 32);
        let n = 4u32;
        let xv = |i: u32, j: u32, lvl: u32| JetPolynomial::variable(i * n + j, lvl);
        let mut expected = Vec::new();
        for i in 0..n {
            for j in 0..n {
                let mut sq = JetPolynomial::zero();
                let mut mixed = JetPolynomial::zero();
                for k in 0..n {
                    sq = sq.add(&xv(i, k, 0).mul(&xv(k, j, 0)));
                    mixed = mixed
                        .add(&xv(i, k, 0).mul(&xv(k, j, 1)))
                        .add(&xv(i, k, 1).mul(&xv(k, j, 0)));
                }
                expected.push(sq);
                expected.push(mixed);
            }
        }
        assert_eq!(gens, expected);
    }

    #[test]
    fn matrix_ideals_basics() {
        // 2x2, order 0: four quadratic entry polynomials.
        let (vars, gens) = matrix_power_jet_ideal(2, 2, 0, false).unwrap();
        assert_eq!(gens.len(), 4);
        assert_eq!(gens[0].render(&vars), "x1_0^2 + x2_0*x3_0");
        assert_eq!(homogeneous_min_degree(&gens).unwrap(), 2);
        // sl6, cube plus trace: 36 cubics and 1 quadratic.
        let (_, gens) = matrix_power_jet_ideal(6, 3, 0, true).unwrap();
        assert_eq!(gens.len(), 37);
        assert_eq!(homogeneous_min_degree(&gens).unwrap(), 2);
        assert_eq!(gens[36].homogeneous_degree(), Some(2));
        assert!(matrix_power_jet_ideal(4, 5, 0, false).is_err());
        assert!(homogeneous_min_degree(&[parse_polynomial("x^3").unwrap().0]).unwrap() == 3);
        assert!(homogeneous_min_degree(&[parse_polynomial("x^3 + x").unwrap().0]).is_err());
    }

    #[test]
    fn traceless_substitution() {
        // X^2 of a traceless 2x2 matrix is scalar: the off-diagonal entries
        // x12*(x11 + x22) vanish identically and the diagonal ones agree, so
        // only one distinct quadric remains (listed once per diagonal slot).
        let (_, gens) = matrix_power_jet_ideal(2, 2, 0, true).unwrap();
        assert_eq!(gens.len(), 2);
        assert_eq!(gens[0], gens[1]);
    }

    #[test]
    fn expansion_is_graded_and_isobaric() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..40 {
            // Random homogeneous polynomial in 3 variables.
            let deg = rng.gen_range(1..=4u32);
            let mut f = JetPolynomial::zero();
            for _ in 0..rng.gen_range(1..=5) {
                let mut t = JetPolynomial::constant(rng.gen_range(-4..=4i64));
                for _ in 0..deg {
                    t = t.mul(&JetPolynomial::variable(rng.gen_range(0..3u32), 0));
                }
                f = f.add(&t);
            }
            if f.is_zero() {
                continue;
            }
            let m = rng.gen_range(0..=4u32);
            for (j, fj) in jet_expand(&f, m).unwrap().iter().enumerate() {
                if fj.is_zero() {
                    continue;
                }
                assert_eq!(fj.homogeneous_degree(), Some(deg));
                for mono in fj.terms.keys() {
                    let weight: u32 = mono.iter().map(|&((_, lvl), e)| lvl * e).sum();
                    assert_eq!(weight, j as u32, "jet weight must match the index");
                }
            }
        }
    }

    #[test]
    fn expansion_matches_series_evaluation() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        let (f, vars) = parse_polynomial("x^3 - 2*x*y*z + z^2 + 5*y").unwrap();
        let nvars = vars.len() as u32;
        for _ in 0..100 {
            let m = rng.gen_range(0..=3u32);
            let jets: Vec<Vec<i128>> = (0..nvars)
                .map(|_| (0..=m).map(|_| rng.gen_range(-5..=5i64) as i128).collect())
                .collect();
            let tau: i128 = rng.gen_range(-3..=3);
            // Direct: evaluate f at the truncated series, then reduce mod
            // tau^{m+1} symbolically by expanding with one formal variable.
            // Instead compare coefficient-wise: expand f at series with an
            // extra formal level variable is equivalent to checking
            // sum_j f^(j) tau^j == f(series(tau)) truncated; over integers
            // truncation differs by higher powers, so evaluate both sides
            // as polynomials in tau of degree <= m after discarding higher
            // terms via exact polynomial arithmetic in tau.
            let expanded = jet_expand(&f, m).unwrap();
            let lhs: i128 = expanded
                .iter()
                .enumerate()
                .map(|(j, fj)| fj.eval(&|(b, l)| jets[b as usize][l as usize]) * tau.pow(j as u32))
                .sum();
            // Right side: coefficients of tau^0..tau^m of f(series), built
            // with exact univariate arithmetic in tau.
            let series_coeffs = eval_series(&f, &jets, m);
            let rhs: i128 = series_coeffs
                .iter()
                .enumerate()
                .map(|(j, c)| c * tau.pow(j as u32))
                .sum();
            assert_eq!(lhs, rhs);
        }
    }

    /// Coefficients of tau^0..tau^m of f evaluated at the numeric jets.
    fn eval_series(f: &JetPolynomial, jets: &[Vec<i128>], m: u32) -> Vec<i128> {
        let len = m as usize + 1;
        let mul = |a: &[i128], b: &[i128]| -> Vec<i128> {
            let mut out = vec![0; len];
            for (i, &x) in a.iter().enumerate() {
                for (j, &y) in b.iter().enumerate() {
                    if i + j < len {
                        out[i + j] += x * y;
                    }
                }
            }
            out
        };
        let mut acc = vec![0i128; len];
        for (mono, &c) in &f.terms {
            let mut t = vec![0i128; len];
            t[0] = i128::from(c);
            for &((base, _), e) in mono.iter() {
                for _ in 0..e {
                    t = mul(&t, &jets[base as usize]);
                }
            }
            for (a, b) in acc.iter_mut().zip(&t) {
                *a += b;
            }
        }
        acc
    }

    #[test]
    fn zero_prefix_embedding() {
        // For homogeneous generators of degree >= 2: if (x_1,...,x_{m-1})
        // solves the (m-2)-jet system then (0, x_1,...,x_m) solves the
        // m-jet system. Numeric replay with square-zero matrix arcs.
        let mut rng = ChaCha8Rng::seed_from_u64(23);
        let n = 3usize;
        let (_, base_gens) = matrix_power_jet_ideal(n, 2, 0, false).unwrap();
        let f_entries: Vec<JetPolynomial> = base_gens;
        for _ in 0..20 {
            let m = rng.gen_range(2..=4u32);
            // Arc X(t) = sum_j N_j t^j with N_j in span{E12, E13}: any such
            // arc satisfies X(t)^2 = 0 identically, hence solves every jet
            // system. x_m is arbitrary.
            let levels = m as usize + 1;
            let mut coords = vec![vec![0i128; levels]; n * n];
            for lvl in 1..levels {
                if lvl < levels - 1 {
                    coords[1][lvl] = rng.gen_range(-4..=4); // E12 entry
                    coords[2][lvl] = rng.gen_range(-4..=4); // E13 entry
                } else {
                    for cell in coords.iter_mut() {
                        cell[lvl] = rng.gen_range(-4..=4); // arbitrary x_m
                    }
                }
            }
            // Level 0 is the zero matrix (the "0" prefix); levels 1..m-1
            // solve the lower system; level m is arbitrary.
            for f in &f_entries {
                for (j, fj) in jet_expand(f, m).unwrap().iter().enumerate() {
                    let v = fj.eval(&|(b, l)| coords[b as usize][l as usize]);
                    assert_eq!(v, 0, "f^({j}) must vanish on the shifted point");
                }
            }
        }
    }
}
