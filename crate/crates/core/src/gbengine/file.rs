use std::sync::Arc;

use crate::error::{Error, Result};
use crate::polycore::{parse_poly, Coefficients, Field, MatrixKind, PolyRing, VariableTable};

use super::Ideal;

/// An ideal written as text: a header `ring <kind> n=<size> char=<p or 0>`
/// followed by one polynomial per line. Blank lines and lines starting with
/// `#` are skipped.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IdealFile {
    pub kind: MatrixKind,
    pub n: usize,
    pub coefficients: Coefficients,
    pub lines: Vec<String>,
}

fn header_error(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(format!("ideal file header: {}", msg.into()))
}

impl IdealFile {
    pub fn parse(text: &str) -> Result<Self> {
        let mut body = text.lines().map(str::trim).filter(|l| !l.is_empty() && !l.starts_with('#'));
        let header = body.next().ok_or_else(|| header_error("missing"))?;
        let words: Vec<&str> = header.split_whitespace().collect();
        let [ring, kind, n, ch] = words[..] else {
            return Err(header_error(format!("expected `ring <kind> n=<size> char=<p>`, got `{header}`")));
        };
        if ring != "ring" {
            return Err(header_error(format!("expected `ring`, got `{ring}`")));
        }
        let kind: MatrixKind = kind.parse()?;
        let value = |word: &str, key: &str| -> Result<u64> {
            word.strip_prefix(key)
                .and_then(|v| v.parse().ok())
                .ok_or_else(|| header_error(format!("expected `{key}<integer>`, got `{word}`")))
        };
        let n = value(n, "n=")? as usize;
        let coefficients = match value(ch, "char=")? {
            0 => Coefficients::Rational,
            p => Coefficients::Prime(p),
        };
        Ok(IdealFile { kind, n, coefficients, lines: body.map(String::from).collect() })
    }

    pub fn table(&self) -> Result<VariableTable> {
        VariableTable::new(self.kind, self.n)
    }

    /// The generators, parsed in `ring`. Zero lines are dropped.
    pub fn ideal<F: Field>(&self, ring: &Arc<PolyRing<F>>) -> Result<Ideal<F>> {
        if ring.table().without_aux() != self.table()? || ring.field().descriptor() != self.coefficients {
            return Err(Error::MismatchedTables);
        }
        let mut gens = Vec::with_capacity(self.lines.len());
        for line in &self.lines {
            let f = parse_poly(line, ring)?;
            if !f.is_zero() {
                gens.push(f);
            }
        }
        Ideal::new(ring, gens)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::polycore::{print_poly, PrimeField};

    #[test]
    fn reads_header_and_generators() {
        let text = "ring symmetric n=2 char=3\n# the determinant\nx[1,1]*x[2,2] - x[1,2]^2\n\n";
        let file = IdealFile::parse(text).unwrap();
        assert_eq!(file.coefficients, Coefficients::Prime(3));
        let ring = PolyRing::grevlex(PrimeField::new(3).unwrap(), file.table().unwrap());
        let ideal = file.ideal(&ring).unwrap();
        assert_eq!(ideal.gens().len(), 1);
        assert_eq!(print_poly(&ideal.gens()[0]), "-x[1,2]^2 + x[1,1]*x[2,2]");
    }

    #[test]
    fn rejects_bad_headers() {
        assert!(IdealFile::parse("").is_err());
        assert!(IdealFile::parse("ring symmetric n=3").is_err());
        assert!(IdealFile::parse("field symmetric n=3 char=2").is_err());
        assert!(IdealFile::parse("ring triangular n=3 char=2").is_err());
        assert_eq!(IdealFile::parse("ring skew n=4 char=0").unwrap().coefficients, Coefficients::Rational);
    }
}
