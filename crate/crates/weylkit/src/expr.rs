//! Parsers for the small expression languages used on the command line:
//! generator words (`"s0 s2 sigma12"`), root expressions (`"a0123"`,
//! `"d - a2"`, `"[1,0,2,2,1,1]"`), and coweight expressions (`"h1 - h2"`,
//! `"1/2 h3 + hd"`, `"[1,-1,0,0,0,0]"`).

use std::sync::Arc;

use num_rational::Rational64;

use crate::cartan::CartanData;
use crate::error::{Error, Result};
use crate::lattice::{CoweightVec, RootVec};
use crate::weylgroup::{
    diagram_automorphism, named_automorphisms, GeneratorToken, GroupElement,
};

fn err(msg: impl Into<String>) -> Error {
    Error::ParseError(msg.into())
}

/// Parses a whitespace-separated generator word. Each token is a simple
/// reflection `s<i>`, the name of a built-in diagram automorphism of the
/// ambient (`sigma1`, `pi`, `p1p2`, ...), or an explicit automorphism
/// `aut:[i0,i1,...]` giving the image of each node. An empty string is the
/// identity word.
pub fn parse_word(input: &str, data: &Arc<CartanData>) -> Result<Vec<GeneratorToken>> {
    let named = named_automorphisms(data);
    let mut tokens = Vec::new();
    for raw in input.split_whitespace() {
        if let Some(rest) = raw.strip_prefix('s') {
            if let Ok(i) = rest.parse::<usize>() {
                if i >= data.size() {
                    return Err(err(format!(
                        "token {raw}: node index {i} out of range (size {})",
                        data.size()
                    )));
                }
                tokens.push(GeneratorToken::S(i));
                continue;
            }
        }
        if let Some(list) = raw.strip_prefix("aut:") {
            let image = parse_index_list(list)
                .ok_or_else(|| err(format!("token {raw}: expected aut:[i0,i1,...]")))?;
            // Validate against the ambient before accepting the token.
            let name = format!("aut{list}");
            diagram_automorphism(&name, &image, data)?;
            tokens.push(GeneratorToken::Aut { name, image });
            continue;
        }
        if let Some((name, image)) = named.iter().find(|(n, _)| n == raw) {
            tokens.push(GeneratorToken::Aut { name: name.clone(), image: image.clone() });
            continue;
        }
        let known: Vec<&str> = named.iter().map(|(n, _)| n.as_str()).collect();
        return Err(err(format!(
            "unknown generator {raw}; expected s<i>, aut:[...], or one of {known:?}"
        )));
    }
    Ok(tokens)
}

fn parse_index_list(text: &str) -> Option<Vec<usize>> {
    let inner = text.strip_prefix('[')?.strip_suffix(']')?;
    inner.split(',').map(|p| p.trim().parse::<usize>().ok()).collect()
}

/// Parses an automorphism specification for the search entry points:
/// `none` (or empty) for no extra generators, `cyc4` for the ambient's
/// built-in rotation of maximal order, or comma-separated automorphism
/// names.
pub fn parse_aut_spec(spec: &str, data: &Arc<CartanData>) -> Result<Vec<GroupElement>> {
    let named = named_automorphisms(data);
    let lookup = |name: &str| -> Result<GroupElement> {
        let (_, image) = named
            .iter()
            .find(|(n, _)| n == name)
            .ok_or_else(|| err(format!("unknown automorphism name {name:?}")))?;
        diagram_automorphism(name, image, data)
    };
    match spec {
        "none" | "" => Ok(Vec::new()),
        "cyc4" => {
            let rotation = ["sigma12", "p1p2", "pi"]
                .iter()
                .find(|n| named.iter().any(|(m, _)| m == *n))
                .ok_or_else(|| err("this system has no named rotation for cyc4"))?;
            Ok(vec![lookup(rotation)?])
        }
        list => list.split(',').map(|n| lookup(n.trim())).collect(),
    }
}

/// One signed additive term of an expression, split at top-level `+`/`-`.
fn split_terms(input: &str) -> Result<Vec<(i64, &str)>> {
    let mut terms = Vec::new();
    let mut sign = 1i64;
    let mut start = 0usize;
    let mut depth = 0i32;
    let mut leading = true;
    for (i, c) in input.char_indices() {
        match c {
            '[' => depth += 1,
            ']' => {
                depth -= 1;
                if depth < 0 {
                    return Err(err(format!("unbalanced ']' at position {i}")));
                }
            }
            '+' | '-' if depth == 0 => {
                let seg = input[start..i].trim();
                if seg.is_empty() {
                    if !(leading && terms.is_empty()) {
                        return Err(err(format!("empty term before position {i}")));
                    }
                } else {
                    terms.push((sign, seg));
                }
                sign = if c == '-' { -1 } else { 1 };
                start = i + 1;
                leading = false;
            }
            _ => {}
        }
    }
    if depth != 0 {
        return Err(err("unbalanced '['".to_string()));
    }
    let seg = input[start..].trim();
    if seg.is_empty() {
        if !terms.is_empty() || !leading {
            return Err(err("trailing operator without a term".to_string()));
        }
    } else {
        terms.push((sign, seg));
    }
    if terms.is_empty() {
        return Err(err("empty expression".to_string()));
    }
    Ok(terms)
}

/// Splits an optional leading coefficient (digits, optionally `p/q`) from a
/// term, allowing `2 a0`, `2*a0`, and `3/2 h1` spellings.
fn split_coefficient(term: &str) -> (Option<&str>, &str) {
    let digits_end = term.find(|c: char| !c.is_ascii_digit()).unwrap_or(term.len());
    if digits_end == 0 {
        return (None, term);
    }
    let mut end = digits_end;
    let rest = &term[digits_end..];
    if let Some(after_slash) = rest.strip_prefix('/') {
        let denom_end =
            after_slash.find(|c: char| !c.is_ascii_digit()).unwrap_or(after_slash.len());
        if denom_end > 0 {
            end = digits_end + 1 + denom_end;
        }
    }
    let coeff = &term[..end];
    let symbol = term[end..].trim_start_matches([' ', '*']).trim();
    (Some(coeff), symbol)
}

fn parse_rational(text: &str) -> Result<Rational64> {
    if let Some((num, den)) = text.split_once('/') {
        let n: i64 = num.parse().map_err(|_| err(format!("bad coefficient {text}")))?;
        let d: i64 = den.parse().map_err(|_| err(format!("bad coefficient {text}")))?;
        if d == 0 {
            return Err(err(format!("zero denominator in {text}")));
        }
        Ok(Rational64::new(n, d))
    } else {
        let n: i64 = text.parse().map_err(|_| err(format!("bad coefficient {text}")))?;
        Ok(Rational64::from_integer(n))
    }
}

/// Parses a root expression over the simple roots. Primitives are the
/// compressed digit form `a<digits>` (one summand per digit, so `a0122`
/// means `a0 + a1 + 2 a2`), the null root `d`, and an explicit coordinate
/// list `[c0,c1,...]`; terms combine with `+`/`-` and optional integer
/// coefficients.
pub fn parse_root_expr(input: &str, data: &CartanData) -> Result<RootVec> {
    let size = data.size();
    let mut acc = RootVec::zero(size);
    for (sign, term) in split_terms(input)? {
        let (coeff, symbol) = split_coefficient(term);
        let k = match coeff {
            None => 1i64,
            Some(c) => {
                let r = parse_rational(c)?;
                if !r.is_integer() {
                    return Err(err(format!("root coefficient {c} must be an integer")));
                }
                r.to_integer()
            }
        };
        let primitive = parse_root_primitive(symbol, data)?;
        acc = acc.add(&primitive.scale(sign * k));
    }
    Ok(acc)
}

fn parse_root_primitive(symbol: &str, data: &CartanData) -> Result<RootVec> {
    let size = data.size();
    if symbol == "d" {
        return data.null_root();
    }
    if let Some(digits) = symbol.strip_prefix('a') {
        if !digits.is_empty() && digits.chars().all(|c| c.is_ascii_digit()) {
            let mut coords = vec![0i64; size];
            for c in digits.chars() {
                let i = (c as u8 - b'0') as usize;
                if i >= size {
                    return Err(err(format!(
                        "{symbol}: node index {i} out of range (size {size})"
                    )));
                }
                coords[i] += 1;
            }
            return Ok(RootVec::new(coords));
        }
    }
    if symbol.starts_with('[') {
        let inner = symbol
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| err(format!("{symbol}: expected [c0,c1,...]")))?;
        let coords: Vec<i64> = inner
            .split(',')
            .map(|p| p.trim().parse::<i64>().map_err(|_| err(format!("bad coordinate in {symbol}"))))
            .collect::<Result<_>>()?;
        if coords.len() != size {
            return Err(err(format!(
                "{symbol}: expected {size} coordinates, got {}",
                coords.len()
            )));
        }
        return Ok(RootVec::new(coords));
    }
    Err(err(format!("unrecognized root term {symbol}")))
}

/// Parses a coweight expression over the basic coweights. Primitives are
/// `h<i>` (1-based, paired with node `i`), the level coweight `hd`, and an
/// explicit coordinate list `[c1,...,cn,cd]` of rationals; terms combine
/// with `+`/`-` and optional rational coefficients like `1/2`.
pub fn parse_coweight_expr(input: &str, data: &CartanData) -> Result<CoweightVec> {
    let size = data.size();
    let mut acc = CoweightVec::zero(size);
    for (sign, term) in split_terms(input)? {
        let (coeff, symbol) = split_coefficient(term);
        let k = match coeff {
            None => Rational64::from_integer(1),
            Some(c) => parse_rational(c)?,
        };
        let primitive = parse_coweight_primitive(symbol, size)?;
        acc = acc.add(&primitive.scale(k * Rational64::from_integer(sign)));
    }
    Ok(acc)
}

fn parse_coweight_primitive(symbol: &str, size: usize) -> Result<CoweightVec> {
    if symbol == "hd" {
        return Ok(CoweightVec::delta_dual(size));
    }
    if let Some(digits) = symbol.strip_prefix('h') {
        if let Ok(i) = digits.parse::<usize>() {
            if i == 0 || i >= size {
                return Err(err(format!(
                    "{symbol}: index must be between 1 and {} (or hd)",
                    size - 1
                )));
            }
            return Ok(CoweightVec::fundamental(i, size));
        }
    }
    if symbol.starts_with('[') {
        let inner = symbol
            .strip_prefix('[')
            .and_then(|s| s.strip_suffix(']'))
            .ok_or_else(|| err(format!("{symbol}: expected [c1,...,cd]")))?;
        let coords: Vec<Rational64> =
            inner.split(',').map(|p| parse_rational(p.trim())).collect::<Result<_>>()?;
        if coords.len() != size {
            return Err(err(format!(
                "{symbol}: expected {size} coordinates, got {}",
                coords.len()
            )));
        }
        return Ok(CoweightVec::new(coords));
    }
    Err(err(format!("unrecognized coweight term {symbol}")))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::weylgroup::evaluate_word;
    use std::sync::Arc;

    fn d5() -> Arc<CartanData> {
        Arc::new(CartanData::load_builtin("D5~".parse().unwrap()).unwrap())
    }

    #[test]
    fn words_parse_and_evaluate() {
        let data = d5();
        let w = parse_word("s1 s3 s2", &data).unwrap();
        assert_eq!(w.len(), 3);
        let g = evaluate_word(&w, &data).unwrap();
        assert_eq!(
            g.act(&RootVec::simple(0, 6)),
            parse_root_expr("a0123", &data).unwrap()
        );
        assert!(parse_word("", &data).unwrap().is_empty());
        let named = parse_word("sigma12", &data).unwrap();
        let explicit = parse_word("aut:[5,4,3,2,0,1]", &data).unwrap();
        assert_eq!(
            evaluate_word(&named, &data).unwrap().matrix(),
            evaluate_word(&explicit, &data).unwrap().matrix()
        );
        assert!(parse_word("s9", &data).is_err());
        assert!(parse_word("bogus", &data).is_err());
    }

    #[test]
    fn root_expressions() {
        let data = d5();
        assert_eq!(
            parse_root_expr("a0122", &data).unwrap(),
            RootVec::new(vec![1, 1, 2, 0, 0, 0])
        );
        assert_eq!(parse_root_expr("d", &data).unwrap(), data.null_root().unwrap());
        assert_eq!(
            parse_root_expr("d - a0", &data).unwrap(),
            RootVec::new(vec![0, 1, 2, 2, 1, 1])
        );
        assert_eq!(
            parse_root_expr("2 a3 + [1,0,0,-1,0,0]", &data).unwrap(),
            RootVec::new(vec![1, 0, 0, 1, 0, 0])
        );
        assert_eq!(
            parse_root_expr("-a1", &data).unwrap(),
            RootVec::new(vec![0, -1, 0, 0, 0, 0])
        );
        assert!(parse_root_expr("", &data).is_err());
        assert!(parse_root_expr("a9", &data).is_err());
        assert!(parse_root_expr("1/2 a1", &data).is_err());
        assert!(parse_root_expr("a1 - - a2", &data).is_err());
    }

    #[test]
    fn coweight_expressions() {
        let data = d5();
        assert_eq!(
            parse_coweight_expr("h1 - h2", &data).unwrap(),
            CoweightVec::from_integers(&[1, -1, 0, 0, 0, 0])
        );
        assert_eq!(
            parse_coweight_expr("1/2 h1 + hd", &data).unwrap(),
            CoweightVec::new(vec![
                Rational64::new(1, 2),
                Rational64::from_integer(0),
                Rational64::from_integer(0),
                Rational64::from_integer(0),
                Rational64::from_integer(0),
                Rational64::from_integer(1),
            ])
        );
        assert_eq!(
            parse_coweight_expr("[1,-1,0,0,0,0]", &data).unwrap(),
            CoweightVec::from_integers(&[1, -1, 0, 0, 0, 0])
        );
        assert!(parse_coweight_expr("h0", &data).is_err());
        assert!(parse_coweight_expr("h7", &data).is_err());
    }
}
