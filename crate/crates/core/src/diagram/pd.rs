//! Text form of a PD code: one `X[under_in,over_in,under_out,over_out;±]`
//! per crossing and one `O` per crossing-free loop. Whitespace is ignored
//! everywhere.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use super::{ArcId, Crossing, PlanarDiagram};
use crate::error::{Error, Result};

struct Scanner<'a> {
    chars: std::iter::Peekable<std::str::Chars<'a>>,
    line: usize,
    column: usize,
}

impl<'a> Scanner<'a> {
    fn new(text: &'a str) -> Self {
        Self { chars: text.chars().peekable(), line: 1, column: 1 }
    }

    fn skip_ws(&mut self) {
        while let Some(&c) = self.chars.peek() {
            if !c.is_whitespace() {
                break;
            }
            self.bump();
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.next()?;
        if c == '\n' {
            self.line += 1;
            self.column = 1;
        } else {
            self.column += 1;
        }
        Some(c)
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.peek().copied()
    }

    fn error(&self, message: impl Into<String>) -> Error {
        Error::Parse { line: self.line, column: self.column, message: message.into() }
    }

    fn expect(&mut self, want: char) -> Result<()> {
        match self.peek() {
            Some(c) if c == want => {
                self.bump();
                Ok(())
            }
            Some(c) => Err(self.error(format!("expected '{want}', found '{c}'"))),
            None => Err(self.error(format!("expected '{want}', found end of input"))),
        }
    }

    fn number(&mut self) -> Result<ArcId> {
        self.skip_ws();
        let mut digits = String::new();
        while let Some(&c) = self.chars.peek() {
            if !c.is_ascii_digit() {
                break;
            }
            digits.push(c);
            self.bump();
        }
        if digits.is_empty() {
            return Err(self.error("expected an arc number"));
        }
        ArcId::from_str(&digits).map_err(|_| self.error("arc number too large"))
    }
}

impl PlanarDiagram {
    pub fn parse_pd(text: &str) -> Result<PlanarDiagram> {
        let mut s = Scanner::new(text);
        let mut crossings = Vec::new();
        let mut positions = Vec::new();
        let mut loops = 0;
        while let Some(c) = s.peek() {
            let at = (s.line, s.column);
            match c {
                'O' => {
                    s.bump();
                    loops += 1;
                }
                'X' => {
                    s.bump();
                    s.expect('[')?;
                    let mut arcs = [0; 4];
                    for (k, slot) in arcs.iter_mut().enumerate() {
                        if k > 0 {
                            s.expect(',')?;
                        }
                        *slot = s.number()?;
                    }
                    s.expect(';')?;
                    let sign = match s.peek() {
                        Some('+') => 1,
                        Some('-') => -1,
                        _ => return Err(s.error("expected crossing sign '+' or '-'")),
                    };
                    s.bump();
                    s.expect(']')?;
                    crossings.push(Crossing::new(sign, arcs[0], arcs[1], arcs[2], arcs[3]));
                    positions.push(at);
                }
                other => return Err(s.error(format!("unexpected '{other}'"))),
            }
        }
        check_ports(&crossings, &positions)?;
        PlanarDiagram::new(crossings, loops).map_err(|e| Error::Parse {
            line: s.line,
            column: s.column,
            message: e.to_string(),
        })
    }
}

fn check_ports(crossings: &[Crossing], positions: &[(usize, usize)]) -> Result<()> {
    let err = |k: usize, message: String| {
        let (line, column) = positions[k];
        Error::Parse { line, column, message }
    };
    let mut ins: HashMap<ArcId, usize> = HashMap::new();
    let mut outs: HashMap<ArcId, usize> = HashMap::new();
    for (k, c) in crossings.iter().enumerate() {
        for a in [c.under_in, c.over_in] {
            if ins.insert(a, k).is_some() {
                return Err(err(k, format!("arc {a} is an input port twice")));
            }
        }
        for a in [c.under_out, c.over_out] {
            if outs.insert(a, k).is_some() {
                return Err(err(k, format!("arc {a} is an output port twice")));
            }
        }
    }
    let mut dangling: Vec<(usize, ArcId, &str)> = ins
        .iter()
        .filter(|(a, _)| !outs.contains_key(a))
        .map(|(a, k)| (*k, *a, "never leaves a crossing"))
        .chain(
            outs.iter()
                .filter(|(a, _)| !ins.contains_key(a))
                .map(|(a, k)| (*k, *a, "never enters a crossing")),
        )
        .collect();
    dangling.sort();
    if let Some((k, a, what)) = dangling.first() {
        return Err(err(*k, format!("arc {a} {what}")));
    }
    Ok(())
}

impl fmt::Display for PlanarDiagram {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = self
            .crossings
            .iter()
            .map(|c| {
                let sign = if c.sign > 0 { '+' } else { '-' };
                format!("X[{},{},{},{};{}]", c.under_in, c.over_in, c.under_out, c.over_out, sign)
            })
            .collect();
        parts.extend(std::iter::repeat_n("O".to_string(), self.free_loops));
        write!(f, "{}", parts.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::braid::BraidWord;

    #[test]
    fn round_trips_braid_closures() {
        for (n, w) in [(2, vec![1, 1, 1]), (3, vec![1, -2, 1, 2]), (3, vec![]), (3, vec![1])] {
            let d = PlanarDiagram::braid_closure(&BraidWord::new(n, w).unwrap());
            assert_eq!(PlanarDiagram::parse_pd(&d.to_string()).unwrap(), d);
        }
    }

    #[test]
    fn whitespace_insensitive() {
        let d = PlanarDiagram::parse_pd(" X [ 2 ,1, 4,3 ; +]\n\tX[3,4,1,2;+]  O ").unwrap();
        assert_eq!(d.crossing_count(), 2);
        assert_eq!(d.free_loops(), 1);
    }

    #[test]
    fn reports_locations() {
        match PlanarDiagram::parse_pd("X[2,1,4,3;+]\nX[3,4,1,2;*]") {
            Err(Error::Parse { line: 2, column: 11, .. }) => {}
            other => panic!("{other:?}"),
        }
        match PlanarDiagram::parse_pd("X[2,1,4,3;+]\n  X[2,4,1,3;+]") {
            Err(Error::Parse { line: 2, column: 3, message }) => {
                assert!(message.contains("input port twice"), "{message}")
            }
            other => panic!("{other:?}"),
        }
        match PlanarDiagram::parse_pd("X[2,1,4,3;+]\nX[3,4,1,5;+]") {
            Err(Error::Parse { line: 1, .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(PlanarDiagram::parse_pd("").is_err());
        assert!(PlanarDiagram::parse_pd("Y").is_err());
    }
}
