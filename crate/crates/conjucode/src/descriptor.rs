//! Text descriptors for codes: `n=7 g=(1+x)^2*(1+x+x^3)` or `n=3 v=W,w,0`.
//!
//! Exactly one source form is allowed per descriptor: a generator polynomial
//! of the binary image (a divisor of x^{2n}+1) or a generator vector whose
//! T-orbit spans the code. Printing is canonical (term-form polynomial), and
//! print(parse(s)) is idempotent.

use crate::acc::AccCode;
use crate::f4::F4Vector;
use crate::poly::BinPoly;
use crate::{Error, Result};

#[derive(Clone, Debug)]
pub enum CodeSource {
    /// Generator polynomial of the binary cyclic image of length 2n.
    Generator(BinPoly),
    /// Generator vector of the ACC code itself.
    Vector(F4Vector),
}

#[derive(Clone, Debug)]
pub struct CodeDescriptor {
    pub n: usize,
    pub source: CodeSource,
}

impl CodeDescriptor {
    pub fn build(&self) -> Result<AccCode> {
        match &self.source {
            CodeSource::Generator(g) => AccCode::from_gen_poly(g, self.n),
            CodeSource::Vector(v) => {
                if v.len() != self.n {
                    return Err(Error::DimensionMismatch {
                        left: format!("n={}", self.n),
                        right: format!("vector of length {}", v.len()),
                    });
                }
                Ok(AccCode::from_vector(v))
            }
        }
    }
}

impl std::fmt::Display for CodeDescriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match &self.source {
            CodeSource::Generator(g) => write!(f, "n={} g={}", self.n, g),
            CodeSource::Vector(v) => write!(f, "n={} v={}", self.n, v),
        }
    }
}

impl std::str::FromStr for CodeDescriptor {
    type Err = Error;

    fn from_str(s: &str) -> Result<CodeDescriptor> {
        let mut n = None;
        let mut source = None;
        let mut offset = 0;
        for tok in s.split_whitespace() {
            let pos = offset + find_offset(s, tok, offset);
            offset = pos + tok.len();
            let (key, value) = tok.split_once('=').ok_or(Error::Parse {
                pos,
                msg: format!("expected key=value, got {tok:?}"),
            })?;
            match key {
                "n" => {
                    n = Some(value.parse::<usize>().map_err(|_| Error::Parse {
                        pos,
                        msg: format!("bad length {value:?}"),
                    })?);
                }
                "g" if source.is_none() => {
                    source = Some(CodeSource::Generator(value.parse()?));
                }
                "v" if source.is_none() => {
                    source = Some(CodeSource::Vector(value.parse()?));
                }
                "g" | "v" => {
                    return Err(Error::Parse {
                        pos,
                        msg: "exactly one of g= or v= is allowed".to_string(),
                    });
                }
                _ => {
                    return Err(Error::Parse {
                        pos,
                        msg: format!("unknown key {key:?}"),
                    });
                }
            }
        }
        let n = n.ok_or(Error::Parse {
            pos: 0,
            msg: "missing n=".to_string(),
        })?;
        if n == 0 {
            return Err(Error::Parse {
                pos: 0,
                msg: "length must be positive".to_string(),
            });
        }
        let source = source.ok_or(Error::Parse {
            pos: s.len(),
            msg: "missing g= or v= source".to_string(),
        })?;
        Ok(CodeDescriptor { n, source })
    }
}

fn find_offset(s: &str, tok: &str, from: usize) -> usize {
    s[from..].find(tok).unwrap_or(0)
}
