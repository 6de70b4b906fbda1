//! Ingestion and validation of knot records: a strict text grammar for
//! A-polynomials and two-bridge metadata, plus the bundled fixtures.
//!
//! Database format: records separated by blank lines, each record a block of
//! `key = value` lines. Required keys: `name`, `p`, `m`, `eta_plus`,
//! `eta_minus`, `aprime`; optional booleans `attest_irreducible_C` and
//! `attest_AJ` (default false). `#` starts a comment. Polynomials use `M`
//! and `L` with `^` exponents, `*` products and decimal coefficients;
//! `L` exponents must be non-negative, `M` exponents may be negative.

use crate::ring::Poly;
use std::collections::HashMap;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum KnotDbError {
    #[error("syntax error at byte {offset}: {message}")]
    Syntax { offset: usize, message: String },
    #[error("negative L exponent at byte {offset}")]
    NegativeLExponent { offset: usize },
    #[error("duplicate record name `{0}`")]
    DuplicateName(String),
    #[error("record `{record}`: {message}")]
    InvariantViolation { record: String, message: String },
}

fn syntax(offset: usize, message: impl Into<String>) -> KnotDbError {
    KnotDbError::Syntax { offset, message: message.into() }
}

/// One two-bridge knot record.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KnotRecord {
    pub name: String,
    pub p: i64,
    pub m: i64,
    pub eta_plus: u32,
    pub eta_minus: u32,
    pub aprime: Poly,
    pub attest_irreducible_c: bool,
    pub attest_aj: bool,
}

impl KnotRecord {
    /// The full A-polynomial `(L-1)·A'`.
    pub fn full_apolynomial(&self) -> Poly {
        let l_minus_1 = &Poly::l() - &Poly::one();
        &l_minus_1 * &self.aprime
    }

    /// The `L` degree `(p-1)/2` expected of a Theorem-ready record.
    pub fn expected_aprime_degree(&self) -> u32 {
        ((self.p - 1) / 2) as u32
    }
}

/// Parsed database with unique record names, in input order.
#[derive(Clone, Debug, Default)]
pub struct KnotDatabase {
    records: Vec<KnotRecord>,
    index: HashMap<String, usize>,
}

impl KnotDatabase {
    pub fn records(&self) -> &[KnotRecord] {
        &self.records
    }

    pub fn get(&self, name: &str) -> Option<&KnotRecord> {
        self.index.get(name).map(|&i| &self.records[i])
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Groups of records sharing the same two-bridge notation `(p, m)`;
    /// suspect duplicates worth flagging to the user.
    pub fn duplicate_notation_groups(&self) -> Vec<Vec<String>> {
        let mut by_pm: HashMap<(i64, i64), Vec<String>> = HashMap::new();
        for r in &self.records {
            by_pm.entry((r.p, r.m)).or_default().push(r.name.clone());
        }
        let mut groups: Vec<Vec<String>> = by_pm.into_values().filter(|g| g.len() > 1).collect();
        groups.sort();
        groups
    }
}

/// Per-record validation outcome; failures are values, not errors.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RecordDiagnostics {
    pub degree_ok: bool,
    pub expected_degree: u32,
    pub actual_degree: Option<u32>,
    pub even_m_powers_ok: bool,
}

/// Check `deg_L(A') = (p-1)/2` and even `M` powers, without mutating the
/// record.
pub fn validate_record(r: &KnotRecord) -> RecordDiagnostics {
    let actual = r.aprime.l_degree();
    RecordDiagnostics {
        degree_ok: actual == Some(r.expected_aprime_degree()),
        expected_degree: r.expected_aprime_degree(),
        actual_degree: actual,
        even_m_powers_ok: r.aprime.only_even_m_powers(),
    }
}

struct Scanner<'a> {
    bytes: &'a [u8],
    pos: usize,
    base: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str, base: usize) -> Self {
        Scanner { bytes: text.as_bytes(), pos: 0, base }
    }

    fn offset(&self) -> usize {
        self.base + self.pos
    }

    fn skip_ws(&mut self) {
        while self.pos < self.bytes.len() && (self.bytes[self.pos] as char).is_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&self) -> Option<u8> {
        self.bytes.get(self.pos).copied()
    }

    fn eat(&mut self, b: u8) -> bool {
        if self.peek() == Some(b) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn parse_unsigned(&mut self) -> Option<i64> {
        let start = self.pos;
        while self.peek().map(|b| b.is_ascii_digit()).unwrap_or(false) {
            self.pos += 1;
        }
        if self.pos == start {
            return None;
        }
        std::str::from_utf8(&self.bytes[start..self.pos])
            .ok()
            .and_then(|s| s.parse().ok())
    }

    fn parse_signed(&mut self) -> Option<i64> {
        let mark = self.pos;
        let neg = if self.eat(b'-') {
            true
        } else {
            self.eat(b'+');
            false
        };
        match self.parse_unsigned() {
            Some(v) => Some(if neg { -v } else { v }),
            None => {
                self.pos = mark;
                None
            }
        }
    }
}

/// Parse the strict polynomial grammar into canonical form.
pub fn parse_polynomial(text: &str) -> Result<Poly, KnotDbError> {
    parse_polynomial_at(text, 0)
}

fn parse_polynomial_at(text: &str, base: usize) -> Result<Poly, KnotDbError> {
    let mut s = Scanner::new(text, base);
    let mut poly = Poly::zero();
    let mut first = true;
    loop {
        s.skip_ws();
        if s.peek().is_none() {
            if first {
                return Err(syntax(s.offset(), "empty polynomial"));
            }
            return Ok(poly);
        }
        // sign separator
        let neg = match s.peek() {
            Some(b'-') => {
                s.pos += 1;
                true
            }
            Some(b'+') => {
                s.pos += 1;
                false
            }
            _ if first => false,
            _ => return Err(syntax(s.offset(), "expected `+` or `-` between terms")),
        };
        first = false;
        s.skip_ws();
        // optional coefficient
        let coeff = s.parse_unsigned();
        s.skip_ws();
        if coeff.is_some() && s.eat(b'*') {
            s.skip_ws();
            match s.peek() {
                Some(b'M') | Some(b'L') => {}
                _ => return Err(syntax(s.offset(), "expected factor after `*`")),
            }
        }
        // factors
        let mut e_m: i64 = 0;
        let mut e_l: i64 = 0;
        let mut saw_factor = false;
        loop {
            let var = match s.peek() {
                Some(b'M') => 'M',
                Some(b'L') => 'L',
                _ => break,
            };
            let var_offset = s.offset();
            s.pos += 1;
            let exp = if s.eat(b'^') {
                match s.parse_signed() {
                    Some(e) => e,
                    None => return Err(syntax(s.offset(), "expected exponent after `^`")),
                }
            } else {
                1
            };
            match var {
                'M' => e_m += exp,
                _ => {
                    if exp < 0 {
                        return Err(KnotDbError::NegativeLExponent { offset: var_offset });
                    }
                    e_l += exp;
                }
            }
            saw_factor = true;
            s.skip_ws();
            if s.eat(b'*') {
                s.skip_ws();
                // a `*` must be followed by another factor
                match s.peek() {
                    Some(b'M') | Some(b'L') => {}
                    _ => return Err(syntax(s.offset(), "expected factor after `*`")),
                }
            }
        }
        if coeff.is_none() && !saw_factor {
            return Err(syntax(s.offset(), "expected coefficient or variable"));
        }
        if e_l < 0 {
            return Err(KnotDbError::NegativeLExponent { offset: s.offset() });
        }
        let mut c = coeff.unwrap_or(1);
        if neg {
            c = -c;
        }
        poly = &poly + &Poly::mono(c, 0, e_m, e_l as u32);
    }
}

const REQUIRED_KEYS: [&str; 6] = ["name", "p", "m", "eta_plus", "eta_minus", "aprime"];
const OPTIONAL_KEYS: [&str; 2] = ["attest_irreducible_C", "attest_AJ"];

/// Parse a whole database file.
pub fn parse_db(text: &str) -> Result<KnotDatabase, KnotDbError> {
    let mut db = KnotDatabase::default();
    let mut pending: HashMap<String, (String, usize)> = HashMap::new();
    let mut offset = 0usize;
    let flush = |pending: &mut HashMap<String, (String, usize)>,
                     db: &mut KnotDatabase,
                     at: usize|
     -> Result<(), KnotDbError> {
        if pending.is_empty() {
            return Ok(());
        }
        let record = build_record(pending, at)?;
        if db.index.contains_key(&record.name) {
            return Err(KnotDbError::DuplicateName(record.name));
        }
        db.index.insert(record.name.clone(), db.records.len());
        db.records.push(record);
        pending.clear();
        Ok(())
    };
    for line in text.split_inclusive('\n') {
        let line_start = offset;
        offset += line.len();
        let raw = line.strip_suffix('\n').unwrap_or(line);
        let uncommented = match raw.find('#') {
            Some(i) => &raw[..i],
            None => raw,
        };
        if uncommented.trim().is_empty() {
            flush(&mut pending, &mut db, line_start)?;
            continue;
        }
        let eq = uncommented
            .find('=')
            .ok_or_else(|| syntax(line_start, "expected `key = value`"))?;
        let key = uncommented[..eq].trim();
        let value = uncommented[eq + 1..].trim();
        let value_offset = line_start + eq + 1 + (uncommented[eq + 1..].len() - uncommented[eq + 1..].trim_start().len());
        if !REQUIRED_KEYS.contains(&key) && !OPTIONAL_KEYS.contains(&key) {
            return Err(syntax(line_start, format!("unknown key `{key}`")));
        }
        if pending.contains_key(key) {
            return Err(syntax(line_start, format!("duplicate key `{key}`")));
        }
        pending.insert(key.to_string(), (value.to_string(), value_offset));
    }
    flush(&mut pending, &mut db, offset)?;
    Ok(db)
}

fn build_record(
    pending: &HashMap<String, (String, usize)>,
    end_offset: usize,
) -> Result<KnotRecord, KnotDbError> {
    let name = pending
        .get("name")
        .map(|(v, _)| v.clone())
        .unwrap_or_else(|| "<unnamed>".to_string());
    let get = |key: &str| -> Result<&(String, usize), KnotDbError> {
        pending.get(key).ok_or_else(|| KnotDbError::InvariantViolation {
            record: name.clone(),
            message: format!("missing required key `{key}` (record ends at byte {end_offset})"),
        })
    };
    let parse_int = |key: &str| -> Result<i64, KnotDbError> {
        let (v, off) = get(key)?;
        v.parse().map_err(|_| syntax(*off, format!("invalid integer for `{key}`")))
    };
    let parse_bool = |key: &str| -> Result<bool, KnotDbError> {
        match pending.get(key) {
            None => Ok(false),
            Some((v, off)) => match v.as_str() {
                "true" => Ok(true),
                "false" => Ok(false),
                _ => Err(syntax(*off, format!("invalid boolean for `{key}`"))),
            },
        }
    };
    get("name")?;
    let p = parse_int("p")?;
    let m = parse_int("m")?;
    let eta_plus = parse_int("eta_plus")?;
    let eta_minus = parse_int("eta_minus")?;
    let (aprime_text, aprime_offset) = get("aprime")?;
    let aprime = parse_polynomial_at(aprime_text, *aprime_offset)?;
    if p <= 1 || p % 2 == 0 {
        return Err(KnotDbError::InvariantViolation {
            record: name,
            message: format!("p must be an odd integer > 1, got {p}"),
        });
    }
    if eta_plus < 0 || eta_minus < 0 {
        return Err(KnotDbError::InvariantViolation {
            record: name,
            message: "crossing counts must be non-negative".into(),
        });
    }
    if aprime.is_zero() {
        return Err(KnotDbError::InvariantViolation {
            record: name,
            message: "aprime must be nonzero".into(),
        });
    }
    if aprime.has_t() {
        return Err(KnotDbError::InvariantViolation {
            record: name,
            message: "aprime must not involve t".into(),
        });
    }
    Ok(KnotRecord {
        name,
        p,
        m,
        eta_plus: eta_plus as u32,
        eta_minus: eta_minus as u32,
        aprime,
        attest_irreducible_c: parse_bool("attest_irreducible_C")?,
        attest_aj: parse_bool("attest_AJ")?,
    })
}

/// The records shipped with the crate (currently the 6₂ fixture of the
/// verification pipeline).
pub fn bundled_db() -> KnotDatabase {
    parse_db(BUNDLED_KDB).expect("bundled fixture parses")
}

/// Raw text of the bundled database.
pub const BUNDLED_KDB: &str = include_str!("../data/knots.kdb");
