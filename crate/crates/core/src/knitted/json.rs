use serde::{Deserialize, Serialize};

use super::{KnittedDiagram, KnittedTemplate, Port};
use crate::braid::BraidWord;
use crate::error::{Error, Result};

/// On-disk form:
/// `{"boxes":[{"strands":3,"word":[1,-2,1]}],"wiring":[["b0.out0","b0.in0"],...]}`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct KnittedJson {
    pub boxes: Vec<BoxJson>,
    pub wiring: Vec<[String; 2]>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct BoxJson {
    pub strands: usize,
    #[serde(default)]
    pub word: Vec<i32>,
}

enum End {
    In(Port),
    Out(Port),
}

fn parse_end(s: &str) -> Result<End> {
    let bad = || Error::Format(format!("bad endpoint '{s}', expected b<box>.in<k> or b<box>.out<k>"));
    let rest = s.trim().strip_prefix('b').ok_or_else(bad)?;
    let (boxed, port) = rest.split_once('.').ok_or_else(bad)?;
    let boxed: usize = boxed.parse().map_err(|_| bad())?;
    if let Some(k) = port.strip_prefix("out") {
        Ok(End::Out(Port::new(boxed, k.parse().map_err(|_| bad())?)))
    } else if let Some(k) = port.strip_prefix("in") {
        Ok(End::In(Port::new(boxed, k.parse().map_err(|_| bad())?)))
    } else {
        Err(bad())
    }
}

impl KnittedJson {
    pub fn to_diagram(&self) -> Result<KnittedDiagram> {
        let mut wires = Vec::with_capacity(self.wiring.len());
        for [a, b] in &self.wiring {
            match (parse_end(a)?, parse_end(b)?) {
                (End::Out(o), End::In(i)) | (End::In(i), End::Out(o)) => wires.push((o, i)),
                _ => return Err(Error::Format(format!("wire {a} - {b} must join an output to an input"))),
            }
        }
        let template = KnittedTemplate::new(self.boxes.iter().map(|b| b.strands).collect(), wires)?;
        let words = self
            .boxes
            .iter()
            .map(|b| BraidWord::new(b.strands, b.word.clone()))
            .collect::<Result<Vec<_>>>()?;
        KnittedDiagram::new(template, words)
    }

    pub fn from_diagram(k: &KnittedDiagram) -> Self {
        let boxes = k
            .words()
            .iter()
            .map(|w| BoxJson { strands: w.strands(), word: w.letters().to_vec() })
            .collect();
        let wiring = k
            .template()
            .wires()
            .map(|(o, i)| [format!("b{}.out{}", o.boxed, o.pos), format!("b{}.in{}", i.boxed, i.pos)])
            .collect();
        Self { boxes, wiring }
    }
}

impl KnittedDiagram {
    pub fn from_json_str(s: &str) -> Result<Self> {
        let json: KnittedJson = serde_json::from_str(s).map_err(|e| Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })?;
        json.to_diagram()
    }

    pub fn to_json_string(&self) -> String {
        serde_json::to_string_pretty(&KnittedJson::from_diagram(self)).expect("plain data serializes")
    }
}
