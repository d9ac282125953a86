//! Line-oriented text form of a [`Circuit`].
//!
//! ```text
//! qubits 3
//! CNH 3 | 1(0) 2(0)
//! H 3
//! SWAP 1 3
//! OPAQUE 2 3 : 0 0 0 0 ...
//! ```
//!
//! Opaque payloads follow the colon as row-major `re im` pairs printed with
//! shortest round-trip formatting, so parsing restores them bit for bit.

use std::fmt::Write;

use sedwit_core::circuit::{Circuit, Control, Gate, GateKind};
use sedwit_core::{Matrix, C64};

use crate::error::{CliError, Result};

pub fn to_text(c: &Circuit) -> String {
    let mut s = format!("qubits {}\n", c.num_qubits());
    for g in c.gates() {
        write!(s, "{g}").unwrap();
        if let Some(m) = g.payload() {
            s.push_str(" :");
            for z in m.as_slice() {
                write!(s, " {} {}", z.re, z.im).unwrap();
            }
        }
        s.push('\n');
    }
    s
}

fn err(line: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_index(tok: &str, line: usize) -> Result<usize> {
    tok.parse().map_err(|_| err(line, format!("bad qubit index {tok:?}")))
}

fn parse_control(tok: &str, line: usize) -> Result<Control> {
    let (q, rest) = tok
        .split_once('(')
        .ok_or_else(|| err(line, format!("bad control {tok:?}")))?;
    let polarity = match rest {
        "1)" => true,
        "0)" => false,
        _ => return Err(err(line, format!("bad control polarity {tok:?}"))),
    };
    Ok(Control {
        qubit: parse_index(q, line)?,
        polarity,
    })
}

fn parse_gate(text: &str, line: usize) -> Result<Gate> {
    let (body, payload) = match text.split_once(':') {
        Some((b, p)) => (b, Some(p)),
        None => (text, None),
    };
    let (head, ctrl) = match body.split_once('|') {
        Some((h, c)) => (h, c),
        None => (body, ""),
    };
    let mut toks = head.split_whitespace();
    let name = toks.next().ok_or_else(|| err(line, "empty gate"))?;
    let kind = GateKind::from_name(name).ok_or_else(|| err(line, format!("unknown gate {name:?}")))?;
    let targets = toks.map(|t| parse_index(t, line)).collect::<Result<Vec<_>>>()?;
    let controls = ctrl
        .split_whitespace()
        .map(|t| parse_control(t, line))
        .collect::<Result<Vec<_>>>()?;
    let payload = match payload {
        None => None,
        Some(p) => {
            let vals = p
                .split_whitespace()
                .map(|v| v.parse::<f64>().map_err(|_| err(line, format!("bad number {v:?}"))))
                .collect::<Result<Vec<_>>>()?;
            if vals.len() % 2 != 0 {
                return Err(err(line, "payload needs re/im pairs"));
            }
            let entries = vals.chunks(2).map(|c| C64::new(c[0], c[1])).collect();
            Some(Matrix::from_row_major(entries).map_err(|e| err(line, e.to_string()))?)
        }
    };
    Gate::new(kind, targets, controls, payload).map_err(|e| err(line, e.to_string()))
}

pub fn from_text(s: &str) -> Result<Circuit> {
    let mut lines = s
        .lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'));
    let (ln, header) = lines.next().ok_or_else(|| err(1, "missing header"))?;
    let n = header
        .strip_prefix("qubits ")
        .and_then(|v| v.trim().parse().ok())
        .ok_or_else(|| err(ln, "expected `qubits <n>`"))?;
    let mut c = Circuit::new(n);
    for (ln, l) in lines {
        c.push(parse_gate(l, ln)?).map_err(|e| err(ln, e.to_string()))?;
    }
    Ok(c)
}

#[cfg(test)]
mod tests {
    use super::*;
    use sedwit_core::circuit::{expand_multicontrolled, vprime_dagger_circuit, w_entangler};

    #[test]
    fn round_trip_is_exact() {
        for c in [
            vprime_dagger_circuit(4).unwrap(),
            expand_multicontrolled(&vprime_dagger_circuit(3).unwrap()),
            w_entangler(3).unwrap(),
        ] {
            let text = to_text(&c);
            assert_eq!(from_text(&text).unwrap(), c);
        }
    }

    #[test]
    fn layout() {
        let text = to_text(&vprime_dagger_circuit(3).unwrap());
        let lines: Vec<&str> = text.lines().collect();
        assert_eq!(lines[0], "qubits 3");
        assert_eq!(lines[1], "CNH 3 | 1(0) 2(0)");
        assert_eq!(lines[2], "H 3");
        assert_eq!(lines[3], "SWAP 1 3");
        assert!(lines[4].starts_with("OPAQUE 2 3 : "));
    }

    #[test]
    fn rejects_bad_input() {
        assert!(matches!(from_text(""), Err(CliError::Parse { line: 1, .. })));
        assert!(matches!(from_text("qubits 2\nFOO 1"), Err(CliError::Parse { line: 2, .. })));
        assert!(from_text("qubits 2\nH 3").is_err());
        assert!(from_text("qubits 2\nCNOT 2 | 1(2)").is_err());
        assert!(from_text("qubits 1\nOPAQUE 1 : 1 0 0").is_err());
        assert!(from_text("qubits 2\n# comment\n\nCNOT 2 | 1(1)").is_ok());
    }
}
