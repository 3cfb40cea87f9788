//! PD text: one `X[a,b,c,d] s` line per crossing and a `C:` header giving
//! the components as cycles of arc labels. See FORMATS.md for the grammar.

use std::collections::BTreeSet;
use std::fmt::Write;

use skeinlab_core::{ArcLabel, Crossing, Diagram, Sign, Violation};

use crate::error::ParseError;

/// Renders a diagram as PD text; `parse_pd` reads it back unchanged.
pub fn write_pd(d: &Diagram) -> String {
    let mut out = String::from("C:");
    for c in d.components() {
        out.push_str(" (");
        for (i, a) in c.iter().enumerate() {
            if i > 0 {
                out.push(' ');
            }
            write!(out, "{a}").unwrap();
        }
        out.push(')');
    }
    out.push('\n');
    for x in d.crossings() {
        writeln!(out, "{x}").unwrap();
    }
    out
}

struct Cursor<'a> {
    text: &'a str,
    pos: usize,
    line: usize,
}

impl<'a> Cursor<'a> {
    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(self.line, self.pos + 1, message)
    }

    fn rest(&self) -> &'a str {
        &self.text[self.pos..]
    }

    fn skip_ws(&mut self) {
        let r = self.rest();
        self.pos += r.len() - r.trim_start().len();
    }

    fn at_end(&self) -> bool {
        self.rest().is_empty()
    }

    fn eat(&mut self, s: &str) -> bool {
        if self.rest().starts_with(s) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<(), ParseError> {
        self.skip_ws();
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.err(format!("expected `{s}`")))
        }
    }

    fn label(&mut self) -> Result<ArcLabel, ParseError> {
        self.skip_ws();
        let digits = self.rest().bytes().take_while(u8::is_ascii_digit).count();
        if digits == 0 {
            return Err(self.err("expected an arc label"));
        }
        let n: ArcLabel = self.rest()[..digits].parse().map_err(|_| self.err("arc label too large"))?;
        if n == 0 {
            return Err(self.err("arc labels start at 1"));
        }
        self.pos += digits;
        Ok(n)
    }
}

struct Located {
    crossing: Crossing,
    line: usize,
    col: usize,
}

/// Parses PD text. Without a `C:` header the components are traced from
/// the crossings, each starting at its lowest label.
pub fn parse_pd(text: &str) -> Result<Diagram, ParseError> {
    let mut crossings: Vec<Located> = Vec::new();
    let mut header: Option<(Vec<Vec<ArcLabel>>, usize)> = None;
    for (i, raw) in text.lines().enumerate() {
        let body = raw.split('#').next().unwrap_or("");
        let mut c = Cursor { text: body, pos: 0, line: i + 1 };
        c.skip_ws();
        if c.at_end() {
            continue;
        }
        let col = c.pos + 1;
        if c.eat("C:") {
            if header.is_some() {
                return Err(ParseError::new(i + 1, col, "second component header"));
            }
            let mut comps = Vec::new();
            loop {
                c.skip_ws();
                if c.at_end() {
                    break;
                }
                c.expect("(")?;
                let mut comp = vec![c.label()?];
                loop {
                    c.skip_ws();
                    if c.eat(")") {
                        break;
                    }
                    comp.push(c.label()?);
                }
                comps.push(comp);
            }
            if comps.is_empty() {
                return Err(c.err("component header lists no components"));
            }
            header = Some((comps, i + 1));
        } else if c.eat("X[") {
            let mut slots = [0; 4];
            for (k, s) in slots.iter_mut().enumerate() {
                if k > 0 {
                    c.expect(",")?;
                }
                *s = c.label()?;
            }
            c.expect("]")?;
            c.skip_ws();
            let sign = if c.eat("+") {
                Sign::Positive
            } else if c.eat("-") {
                Sign::Negative
            } else {
                return Err(c.err("expected crossing sign `+` or `-`"));
            };
            c.skip_ws();
            if !c.at_end() {
                return Err(c.err("unexpected text after crossing"));
            }
            crossings.push(Located { crossing: Crossing::new(slots, sign), line: i + 1, col });
        } else {
            return Err(c.err("expected `X[` or `C:`"));
        }
    }
    let (components, header_line) = match header {
        Some(h) => h,
        None if crossings.is_empty() => return Err(ParseError::new(1, 1, "empty diagram: no crossings and no `C:` header")),
        None => (trace_components(&crossings)?, 1),
    };
    let xs: Vec<Crossing> = crossings.iter().map(|l| l.crossing).collect();
    let d = Diagram::from_parts_unchecked(xs, components);
    let report = d.validate();
    if !report.is_valid() {
        let (line, col) = match blame(&report.violations, &crossings) {
            Some(i) if i < crossings.len() => (crossings[i].line, crossings[i].col),
            _ => (header_line, 1),
        };
        return Err(ParseError::new(line, col, format!("invalid diagram: {report}")));
    }
    Ok(d)
}

/// The crossing a report most likely points at: one named by a violation,
/// else the crossing meeting the most arcs named by violations.
fn blame(vs: &[Violation], xs: &[Located]) -> Option<usize> {
    let mut arcs = BTreeSet::new();
    for v in vs {
        match *v {
            Violation::ArcOutOfRange { crossing, .. } | Violation::SuccessorMismatch { crossing, .. } => return Some(crossing),
            Violation::ArcDirection { arc } | Violation::ArcMultiplicity { arc, .. } => {
                arcs.insert(arc);
            }
            _ => {}
        }
    }
    let hits = |l: &Located| l.crossing.slots.iter().filter(|a| arcs.contains(a)).count();
    let best = xs.iter().map(hits).max().filter(|&h| h > 0)?;
    xs.iter().position(|l| hits(l) == best)
}

fn trace_components(xs: &[Located]) -> Result<Vec<Vec<ArcLabel>>, ParseError> {
    let max = xs.iter().flat_map(|l| l.crossing.slots).max().unwrap_or(0) as usize;
    let mut next: Vec<Option<ArcLabel>> = vec![None; max + 1];
    for l in xs {
        let x = &l.crossing;
        for inc in [0, x.over_in_slot()] {
            let a = x.slots[inc] as usize;
            if next[a].is_some() {
                return Err(ParseError::new(l.line, l.col, format!("arc {a} enters two crossings")));
            }
            next[a] = Some(x.slots[Crossing::through(inc)]);
        }
    }
    let mut seen = BTreeSet::new();
    let mut comps = Vec::new();
    for start in 1..=max {
        if next[start].is_none() || seen.contains(&start) {
            continue;
        }
        let mut comp = Vec::new();
        let mut a = start;
        while seen.insert(a) {
            comp.push(a as ArcLabel);
            a = match next[a] {
                Some(b) => b as usize,
                None => return Err(ParseError::new(1, 1, format!("arc {a} leaves a crossing but never enters one"))),
            };
        }
        if a != start {
            return Err(ParseError::new(1, 1, format!("arc {a} is entered from two arcs")));
        }
        comps.push(comp);
    }
    Ok(comps)
}
