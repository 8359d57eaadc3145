//! The presentation file format.
//!
//! ```text
//! # three-strand braid algebra
//! field Q
//! gens x y
//! rel x*y*x - y*x*y
//! aut x -> y, y -> x
//! ```
//!
//! `field` is optional (default `Q`); `gens` comes first and once; every
//! `rel` line is a homogeneous noncommutative polynomial of the same degree;
//! `aut` lines give the image of each generator exactly once. Coefficients
//! are integers or fractions `p/q`, separated from monomials by `*`.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::exactlin::Matrix;
use crate::field::{Field, FieldSpec};
use crate::presentation::{GradedAutomorphism, Presentation};
use crate::tensorspace::WordBasis;

/// `(coefficient, word)` terms of a polynomial.
pub type Terms = Vec<(BigRational, Vec<usize>)>;

/// A presentation file before it is bound to a coefficient field.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedFile {
    pub field: FieldSpec,
    pub gens: Vec<String>,
    pub degree: usize,
    /// Each relation with its line number, like terms not yet merged.
    pub relations: Vec<(usize, Terms)>,
    /// Image of each generator as `(coefficient, generator)` terms.
    pub aut: Option<Vec<Vec<(BigRational, usize)>>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
enum Tok {
    Ident(String),
    Int(BigInt),
    Slash,
    Star,
    Plus,
    Minus,
    Arrow,
    Comma,
}

struct Lexer {
    line: usize,
    toks: Vec<(usize, Tok)>,
    pos: usize,
    end_col: usize,
}

fn syntax(line: usize, column: usize, message: impl Into<String>) -> Error {
    Error::Syntax {
        line,
        column,
        message: message.into(),
    }
}

impl Lexer {
    fn new(line: usize, text: &str, offset: usize) -> Result<Self> {
        let chars: Vec<char> = text.chars().collect();
        let mut toks = Vec::new();
        let mut i = 0;
        while i < chars.len() {
            let c = chars[i];
            let col = offset + i + 1;
            if c.is_whitespace() {
                i += 1;
                continue;
            }
            if c.is_ascii_alphabetic() || c == '_' {
                let start = i;
                while i < chars.len() && (chars[i].is_ascii_alphanumeric() || chars[i] == '_') {
                    i += 1;
                }
                toks.push((col, Tok::Ident(chars[start..i].iter().collect())));
                continue;
            }
            if c.is_ascii_digit() {
                let start = i;
                while i < chars.len() && chars[i].is_ascii_digit() {
                    i += 1;
                }
                let digits: String = chars[start..i].iter().collect();
                toks.push((col, Tok::Int(digits.parse().expect("ascii digits"))));
                continue;
            }
            let tok = match c {
                '/' => Tok::Slash,
                '*' => Tok::Star,
                '+' => Tok::Plus,
                ',' => Tok::Comma,
                '-' if chars.get(i + 1) == Some(&'>') => {
                    i += 1;
                    Tok::Arrow
                }
                '-' => Tok::Minus,
                other => return Err(syntax(line, col, format!("unexpected character `{other}`"))),
            };
            toks.push((col, tok));
            i += 1;
        }
        Ok(Lexer {
            line,
            toks,
            pos: 0,
            end_col: offset + chars.len() + 1,
        })
    }

    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|(_, t)| t)
    }

    fn col(&self) -> usize {
        self.toks.get(self.pos).map_or(self.end_col, |(c, _)| *c)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).map(|(_, t)| t.clone());
        self.pos += 1;
        t
    }

    fn error(&self, message: impl Into<String>) -> Error {
        syntax(self.line, self.col(), message)
    }

    fn at_end(&self) -> bool {
        self.pos >= self.toks.len()
    }

    /// `int` or `int/int`.
    fn coefficient(&mut self) -> Result<BigRational> {
        let col = self.col();
        let Some(Tok::Int(num)) = self.next() else {
            return Err(syntax(self.line, col, "expected a number"));
        };
        if self.peek() == Some(&Tok::Slash) {
            self.next();
            let col = self.col();
            let Some(Tok::Int(den)) = self.next() else {
                return Err(syntax(self.line, col, "expected a denominator"));
            };
            if den.is_zero() {
                return Err(syntax(self.line, col, "zero denominator"));
            }
            return Ok(BigRational::new(num, den));
        }
        Ok(BigRational::from_integer(num))
    }

    fn generator(&mut self, gens: &[String]) -> Result<usize> {
        let col = self.col();
        match self.next() {
            Some(Tok::Ident(name)) => gens
                .iter()
                .position(|g| *g == name)
                .ok_or(Error::UnknownGenerator { line: self.line, name }),
            _ => Err(syntax(self.line, col, "expected a generator name")),
        }
    }

    /// `[sign] [coef [*]] gen (* gen)*`, or a bare coefficient, as a list of
    /// signed terms.
    fn polynomial(&mut self, gens: &[String]) -> Result<Terms> {
        let mut terms = Vec::new();
        let mut first = true;
        loop {
            let mut sign = BigRational::one();
            match self.peek() {
                Some(Tok::Plus) if !first => {
                    self.next();
                }
                Some(Tok::Minus) => {
                    self.next();
                    sign = -sign;
                }
                None if first => return Err(self.error("expected a polynomial")),
                _ if !first => return Err(self.error("expected `+` or `-`")),
                _ => {}
            }
            first = false;
            let mut coef = sign;
            let mut word = Vec::new();
            if let Some(Tok::Int(_)) = self.peek() {
                coef *= self.coefficient()?;
                if self.peek() == Some(&Tok::Star) {
                    self.next();
                    word.push(self.generator(gens)?);
                }
            } else {
                word.push(self.generator(gens)?);
            }
            if !word.is_empty() {
                while self.peek() == Some(&Tok::Star) {
                    self.next();
                    word.push(self.generator(gens)?);
                }
            }
            terms.push((coef, word));
            if matches!(self.peek(), None | Some(Tok::Comma)) {
                return Ok(terms);
            }
        }
    }
}

/// Strips a trailing `#` comment.
fn strip_comment(line: &str) -> &str {
    line.split_once('#').map_or(line, |(head, _)| head)
}

fn parse_field(line: usize, rest: &str, offset: usize) -> Result<FieldSpec> {
    let words: Vec<&str> = rest.split_whitespace().collect();
    let spec = match words.as_slice() {
        ["Q"] => FieldSpec::Rationals,
        ["F", p] => FieldSpec::Prime(
            p.parse()
                .map_err(|_| syntax(line, offset + 1, format!("bad modulus `{p}`")))?,
        ),
        _ => return Err(syntax(line, offset + 1, "expected `Q` or `F <prime>`")),
    };
    spec.validate()
}

pub fn parse_file(text: &str) -> Result<ParsedFile> {
    let mut field = None;
    let mut gens: Option<Vec<String>> = None;
    let mut degree: Option<(usize, usize)> = None;
    let mut relations = Vec::new();
    let mut images: Vec<Option<Vec<(BigRational, usize)>>> = Vec::new();

    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = strip_comment(raw);
        let trimmed = content.trim_start();
        if trimmed.trim().is_empty() {
            continue;
        }
        let indent = content.len() - trimmed.len();
        let (keyword, rest) = trimmed.split_once(char::is_whitespace).unwrap_or((trimmed, ""));
        let offset = indent + keyword.len() + 1;
        let rest_offset = offset + rest.len() - rest.trim_start().len();
        match keyword {
            "field" => {
                if field.is_some() {
                    return Err(syntax(line, indent + 1, "duplicate `field` line"));
                }
                if gens.is_some() {
                    return Err(syntax(line, indent + 1, "`field` must precede `gens`"));
                }
                field = Some(parse_field(line, rest, rest_offset)?);
            }
            "gens" => {
                if gens.is_some() {
                    return Err(syntax(line, indent + 1, "duplicate `gens` line"));
                }
                let names: Vec<String> = rest.split_whitespace().map(str::to_string).collect();
                if names.is_empty() {
                    return Err(syntax(line, rest_offset, "expected generator names"));
                }
                for (i, n) in names.iter().enumerate() {
                    let ok = n.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                        && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_');
                    if !ok {
                        return Err(syntax(line, rest_offset, format!("invalid generator name `{n}`")));
                    }
                    if names[..i].contains(n) {
                        return Err(Error::InvalidPresentation(format!("duplicate generator `{n}`")));
                    }
                }
                images = vec![None; names.len()];
                gens = Some(names);
            }
            "rel" => {
                let g = gens
                    .as_deref()
                    .ok_or_else(|| syntax(line, indent + 1, "`rel` before `gens`"))?;
                let mut lx = Lexer::new(line, rest, offset)?;
                let terms = lx.polynomial(g)?;
                if !lx.at_end() {
                    return Err(lx.error("unexpected input after relation"));
                }
                let deg = terms[0].1.len();
                if terms.iter().any(|(_, w)| w.len() != deg) {
                    return Err(Error::Inhomogeneous {
                        line,
                        message: "monomials of different degrees".into(),
                    });
                }
                match degree {
                    None => degree = Some((deg, line)),
                    Some((d, first)) if d != deg => {
                        return Err(Error::Inhomogeneous {
                            line,
                            message: format!("degree {deg} differs from degree {d} on line {first}"),
                        })
                    }
                    _ => {}
                }
                relations.push((line, terms));
            }
            "aut" => {
                let g = gens
                    .as_deref()
                    .ok_or_else(|| syntax(line, indent + 1, "`aut` before `gens`"))?;
                let mut lx = Lexer::new(line, rest, offset)?;
                loop {
                    let target = lx.generator(g)?;
                    if lx.next() != Some(Tok::Arrow) {
                        return Err(syntax(
                            line,
                            lx.toks.get(lx.pos - 1).map_or(lx.end_col, |t| t.0),
                            "expected `->`",
                        ));
                    }
                    let col = lx.col();
                    let image = lx.polynomial(g)?;
                    let mut linear = Vec::new();
                    for (c, w) in image {
                        match w.as_slice() {
                            [s] => linear.push((c, *s)),
                            [] if c.is_zero() => {}
                            _ => {
                                return Err(syntax(
                                    line,
                                    col,
                                    "automorphism images must be linear in the generators",
                                ))
                            }
                        }
                    }
                    if images[target].is_some() {
                        return Err(syntax(line, col, format!("image of `{}` given twice", g[target])));
                    }
                    images[target] = Some(linear);
                    match lx.next() {
                        None => break,
                        Some(Tok::Comma) => {}
                        Some(_) => return Err(syntax(line, lx.toks[lx.pos - 1].0, "expected `,`")),
                    }
                }
            }
            other => return Err(syntax(line, indent + 1, format!("unknown directive `{other}`"))),
        }
    }

    let gens = gens.ok_or_else(|| Error::InvalidPresentation("missing `gens` line".into()))?;
    let (degree, _) = degree.ok_or_else(|| Error::InvalidPresentation("no relations".into()))?;
    if degree < 2 {
        return Err(Error::UnsupportedDegree(degree));
    }
    let aut = if images.iter().any(Option::is_some) {
        let missing: Vec<&str> = images
            .iter()
            .zip(&gens)
            .filter(|(i, _)| i.is_none())
            .map(|(_, g)| g.as_str())
            .collect();
        if !missing.is_empty() {
            return Err(Error::InvalidPresentation(format!(
                "automorphism gives no image for {}",
                missing.join(", ")
            )));
        }
        Some(images.into_iter().map(Option::unwrap).collect())
    } else {
        None
    };
    Ok(ParsedFile {
        field: field.unwrap_or(FieldSpec::Rationals),
        gens,
        degree,
        relations,
        aut,
    })
}

fn coerce<F: Field>(f: &F, q: &BigRational) -> Result<F::Elem> {
    f.from_rational(q)
        .ok_or_else(|| Error::InvalidField(format!("coefficient {q} is undefined over {}", f.spec())))
}

/// Binds a parsed file to a field and validates it.
pub fn build<F: Field>(
    parsed: &ParsedFile,
    field: F,
    cap: usize,
) -> Result<(Presentation<F>, Option<GradedAutomorphism<F>>)> {
    let d = parsed.gens.len();
    let basis = WordBasis::new(d, parsed.degree);
    let mut vectors = Vec::new();
    for (_, terms) in &parsed.relations {
        let mut v = vec![field.zero(); basis.len()];
        for (c, w) in terms {
            let i = basis.index(w);
            v[i] = field.add(&v[i], &coerce(&field, c)?);
        }
        vectors.push(v);
    }
    let p = Presentation::from_vectors(field.clone(), parsed.gens.clone(), parsed.degree, vectors)?.with_cap(cap);
    let aut = match &parsed.aut {
        None => None,
        Some(images) => {
            let mut m = Matrix::zeros(&field, d, d);
            for (s, image) in images.iter().enumerate() {
                for (c, t) in image {
                    m.add_to(*t, s, &coerce(&field, c)?);
                }
            }
            Some(p.validate_automorphism(m)?)
        }
    };
    Ok((p, aut))
}

/// `c*` prefix for a term with coefficient `q`, sign handled by the caller.
fn coefficient_prefix(q: &BigRational) -> String {
    if q.is_one() {
        String::new()
    } else {
        format!("{q}*")
    }
}

/// Renders `Σ c·word` with words in lex order.
fn render_terms<'a>(terms: impl Iterator<Item = (BigRational, &'a str)>) -> String {
    let mut out = String::new();
    for (c, word) in terms {
        let neg = c.is_negative();
        let abs = c.abs();
        if out.is_empty() {
            if neg {
                out.push('-');
            }
        } else {
            out.push_str(if neg { " - " } else { " + " });
        }
        out.push_str(&coefficient_prefix(&abs));
        out.push_str(word);
    }
    if out.is_empty() {
        out.push('0');
    }
    out
}

/// Relation basis rows in canonical form, one polynomial per row.
pub fn render_relations<F: Field>(p: &Presentation<F>) -> Vec<String> {
    let f = p.field();
    let basis = p.words(p.degree());
    let names = p.gen_names();
    let space = &p.relations().space;
    if space.is_zero() {
        let zero_word = vec![names[0].as_str(); p.degree()].join("*");
        return vec![format!("0*{zero_word}")];
    }
    (0..space.dim())
        .map(|k| {
            let row = space.basis_vector(k);
            let words: Vec<(BigRational, String)> = row
                .iter()
                .enumerate()
                .filter(|(_, c)| !f.is_zero(c))
                .map(|(i, c)| {
                    let word: Vec<&str> = basis.word(i).iter().map(|&g| names[g].as_str()).collect();
                    (f.to_rational(c), word.join("*"))
                })
                .collect();
            render_terms(words.iter().map(|(c, w)| (c.clone(), w.as_str())))
        })
        .collect()
}

/// `x -> y, y -> x` from the columns of the automorphism matrix.
pub fn render_automorphism<F: Field>(p: &Presentation<F>, alpha: &GradedAutomorphism<F>) -> String {
    let f = p.field();
    let names = p.gen_names();
    let m = alpha.matrix();
    (0..names.len())
        .map(|s| {
            let terms: Vec<(BigRational, &str)> = (0..names.len())
                .filter(|&t| !f.is_zero(m.get(t, s)))
                .map(|t| (f.to_rational(m.get(t, s)), names[t].as_str()))
                .collect();
            format!("{} -> {}", names[s], render_terms(terms.into_iter()))
        })
        .collect::<Vec<_>>()
        .join(", ")
}

/// A complete presentation file; parsing it back gives the same relation
/// space, generators, field, and automorphism.
pub fn render_file<F: Field>(p: &Presentation<F>, alpha: Option<&GradedAutomorphism<F>>) -> String {
    let mut out = format!("field {}\ngens {}\n", p.field().spec(), p.gen_names().join(" "));
    for rel in render_relations(p) {
        out.push_str("rel ");
        out.push_str(&rel);
        out.push('\n');
    }
    if let Some(a) = alpha {
        out.push_str("aut ");
        out.push_str(&render_automorphism(p, a));
        out.push('\n');
    }
    out
}

/// Parses a degree-one element such as `x + 2*y`.
pub fn parse_linear<F: Field>(p: &Presentation<F>, text: &str) -> Result<Vec<F::Elem>> {
    let f = p.field();
    let mut lx = Lexer::new(1, text, 0)?;
    let terms = lx.polynomial(p.gen_names())?;
    if !lx.at_end() {
        return Err(lx.error("unexpected input after element"));
    }
    let mut v = vec![f.zero(); p.dim_e()];
    for (c, w) in terms {
        match w.as_slice() {
            [s] => v[*s] = f.add(&v[*s], &coerce(f, &c)?),
            _ => {
                return Err(Error::InvalidArgument(
                    "only linear combinations of generators can be tested".into(),
                ))
            }
        }
    }
    Ok(v)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::field::{PrimeField, Rationals};
    use crate::samples;
    use crate::twist::semi_cross;

    const BRAID: &str = "# braid\nfield Q\ngens x y\nrel x*y*x - y*x*y\naut x -> y, y -> x\n";

    fn load(text: &str) -> Result<(Presentation<Rationals>, Option<GradedAutomorphism<Rationals>>)> {
        build(&parse_file(text)?, Rationals, crate::tensorspace::DEFAULT_CAP)
    }

    #[test]
    fn parses_braid_file() {
        let (p, aut) = load(BRAID).unwrap();
        assert_eq!(p.degree(), 3);
        assert_eq!(p.relations(), samples::braid().relations());
        assert_eq!(aut.unwrap().matrix(), &samples::swap_matrix());
    }

    #[test]
    fn semicross_renders_cubic() {
        let (p, aut) = load(BRAID).unwrap();
        let out = semi_cross(&p, aut.as_ref().unwrap()).unwrap();
        assert_eq!(render_relations(&out), vec!["x*x*x - y*y*y".to_string()]);
    }

    #[test]
    fn roundtrip_render_parse() {
        let (p, aut) = load(BRAID).unwrap();
        let text = render_file(&p, aut.as_ref());
        assert_eq!(text, "field Q\ngens x y\nrel x*y*x - y*x*y\naut x -> y, y -> x\n");
        let (q, aut2) = load(&text).unwrap();
        assert_eq!(q.relations(), p.relations());
        assert_eq!(aut2, aut);
    }

    #[test]
    fn fractions_and_scaling() {
        let (p, _) = load("gens x y\nrel 2*x*y - 1/3*y*x\nrel -4 * y*y").unwrap();
        assert_eq!(
            render_relations(&p),
            vec!["x*y - 1/6*y*x".to_string(), "y*y".to_string()]
        );
    }

    #[test]
    fn inhomogeneous_relation() {
        assert!(matches!(
            load("gens x y\nrel x*y - y*x*y"),
            Err(Error::Inhomogeneous { line: 2, .. })
        ));
        assert!(matches!(
            load("gens x y\nrel x*y\nrel x*x*x"),
            Err(Error::Inhomogeneous { line: 3, .. })
        ));
    }

    #[test]
    fn unknown_generator_and_syntax_errors() {
        assert!(matches!(
            load("gens x y\nrel x*z"),
            Err(Error::UnknownGenerator { line: 2, .. })
        ));
        match load("gens x y\nrel x*y $ y") {
            Err(Error::Syntax { line, column, .. }) => assert_eq!((line, column), (2, 9)),
            other => panic!("{other:?}"),
        }
        assert!(matches!(load("gens x y\nrel x y"), Err(Error::Syntax { .. })));
        assert!(matches!(load("gens x\nrel x"), Err(Error::UnsupportedDegree(1))));
        assert!(matches!(load("gens x y\nfrobnicate"), Err(Error::Syntax { .. })));
    }

    #[test]
    fn automorphism_errors() {
        let base = "gens x y\nrel x*y*x - y*x*y\n";
        assert!(matches!(
            load(&format!("{base}aut x -> x + y, y -> y")),
            Err(Error::RelationsNotPreserved)
        ));
        assert!(matches!(
            load(&format!("{base}aut x -> x + y, y -> x + y")),
            Err(Error::SingularAutomorphism)
        ));
        assert!(matches!(
            load(&format!("{base}aut x -> y")),
            Err(Error::InvalidPresentation(_))
        ));
        assert!(matches!(
            load(&format!("{base}aut x -> y*x, y -> x")),
            Err(Error::Syntax { .. })
        ));
    }

    #[test]
    fn zero_relation_space_roundtrips() {
        let (p, _) = load("gens x y\nrel x*y - x*y").unwrap();
        assert!(p.relations().is_zero());
        let text = render_file(&p, None);
        let (q, _) = load(&text).unwrap();
        assert!(q.relations().is_zero());
        assert_eq!(q.degree(), 2);
    }

    #[test]
    fn prime_field_files() {
        let parsed = parse_file("field F 5\ngens x y\nrel x*y - 3*y*x").unwrap();
        assert_eq!(parsed.field, FieldSpec::Prime(5));
        let (p, _) = build(&parsed, PrimeField::new(5).unwrap(), 1 << 20).unwrap();
        assert_eq!(render_relations(&p), vec!["x*y + 2*y*x".to_string()]);
        let bad = parse_file("field F 5\ngens x y\nrel x*y - 1/5*y*x").unwrap();
        assert!(matches!(
            build(&bad, PrimeField::new(5).unwrap(), 1 << 20),
            Err(Error::InvalidField(_))
        ));
        assert!(matches!(
            parse_file("field F 6\ngens x\nrel x*x"),
            Err(Error::InvalidField(_))
        ));
    }

    #[test]
    fn linear_elements() {
        let p = samples::cubic();
        let v = parse_linear(&p, "x - 2*y").unwrap();
        assert_eq!(v, vec![Rationals.from_i64(1), Rationals.from_i64(-2)]);
        assert!(parse_linear(&p, "x*y").is_err());
    }
}
