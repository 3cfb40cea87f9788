//! Spec strings: a base diagram followed by `/`-separated transforms, e.g.
//! `pretzel:3,1,1`, `torus2:3/double:wh,n=1,clasp=+` or `fourplat:2,1,1/mirror`.

use skeinlab_core::constructors::{
    braid_closure, double, flat_double_link, four_plat, half_to_full, pretzel, torus2, twist_replace, Clasp, CornerAxis,
    DoubleOptions, TwistAxis,
};
use skeinlab_core::{Diagram, Error};

use crate::error::ParseError;

/// A `name:args` piece of a spec string and its byte offset.
struct Piece<'a> {
    name: &'a str,
    args: Option<&'a str>,
    at: usize,
}

impl Piece<'_> {
    fn err(&self, message: impl Into<String>) -> ParseError {
        ParseError::new(1, self.at + 1, message)
    }

    fn args_at(&self) -> usize {
        self.at + self.name.len() + 1
    }

    /// Comma-separated items with their byte offsets.
    fn items(&self) -> Vec<(&str, usize)> {
        let Some(args) = self.args else { return Vec::new() };
        let mut out = Vec::new();
        let mut off = self.args_at();
        for item in args.split(',') {
            let lead = item.len() - item.trim_start().len();
            out.push((item.trim(), off + lead));
            off += item.len() + 1;
        }
        out
    }

    fn require_args(&self) -> Result<Vec<(&str, usize)>, ParseError> {
        if self.args.is_none_or(|a| a.trim().is_empty()) {
            return Err(self.err(format!("`{}` needs arguments", self.name)));
        }
        Ok(self.items())
    }

    fn no_args(&self) -> Result<(), ParseError> {
        match self.args {
            None => Ok(()),
            Some(_) => Err(ParseError::new(1, self.args_at() + 1, format!("`{}` takes no arguments", self.name))),
        }
    }

    fn ints<T: std::str::FromStr>(&self) -> Result<Vec<T>, ParseError> {
        self.require_args()?.into_iter().map(|(s, at)| number(s, at)).collect()
    }

    fn one<T: std::str::FromStr>(&self) -> Result<T, ParseError> {
        let items = self.require_args()?;
        if items.len() != 1 {
            return Err(self.err(format!("`{}` takes one argument", self.name)));
        }
        number(items[0].0, items[0].1)
    }
}

fn number<T: std::str::FromStr>(s: &str, at: usize) -> Result<T, ParseError> {
    s.parse().map_err(|_| ParseError::new(1, at + 1, format!("expected an integer, found {s:?}")))
}

fn pieces(spec: &str) -> Vec<Piece<'_>> {
    let mut out = Vec::new();
    let mut at = 0;
    for raw in spec.split('/') {
        let lead = raw.len() - raw.trim_start().len();
        let p = raw.trim();
        let (name, args) = match p.split_once(':') {
            Some((n, a)) => (n, Some(a)),
            None => (p, None),
        };
        out.push(Piece { name, args, at: at + lead });
        at += raw.len() + 1;
    }
    out
}

fn base(p: &Piece) -> Result<Diagram, ParseError> {
    let built = match p.name {
        "unknot" => {
            p.no_args()?;
            Ok(Diagram::unknot())
        }
        "unlink" => {
            let k: usize = p.one()?;
            if k == 0 {
                return Err(p.err("an unlink needs at least one component"));
            }
            Ok(Diagram::unlink(k))
        }
        "torus2" => torus2(p.one()?),
        "pretzel" => pretzel(&p.ints::<i32>()?),
        "fourplat" => four_plat(&p.ints::<u32>()?),
        "braid" => {
            let args = p.args.ok_or_else(|| p.err("`braid` needs `strands:word`"))?;
            let (strands, word) = args.split_once(':').ok_or_else(|| p.err("`braid` needs `strands:word`"))?;
            let strands: usize = number(strands.trim(), p.args_at())?;
            let sub = Piece { name: "", args: Some(word), at: p.args_at() + args.len() - word.len() - 1 };
            let word = if word.trim().is_empty() { Vec::new() } else { sub.ints::<i32>()? };
            braid_closure(strands, &word)
        }
        "double" => return Err(p.err("`double` transforms a diagram; write e.g. `torus2:3/double:flat,n=0`")),
        other => return Err(p.err(format!("unknown diagram family `{other}`"))),
    };
    built.map_err(|e| p.err(e.to_string()))
}

fn axis(s: &str, at: usize) -> Result<TwistAxis, ParseError> {
    Ok(match s {
        "parallel" | "p" => TwistAxis::Parallel,
        "antiparallel" | "a" => TwistAxis::Antiparallel,
        "02" => TwistAxis::Fixed(CornerAxis::Corners02),
        "13" => TwistAxis::Fixed(CornerAxis::Corners13),
        _ => return Err(ParseError::new(1, at + 1, format!("unknown twist axis {s:?}"))),
    })
}

/// Options of a `double:` transform, such as `wh,n=1,clasp=+,site=3,hidden`.
pub fn parse_double_options(p: &str) -> Result<DoubleOptions, ParseError> {
    double_options(&Piece { name: "double", args: Some(p), at: 0 })
}

fn double_options(p: &Piece) -> Result<DoubleOptions, ParseError> {
    let items = p.require_args()?;
    let (kind, at) = items[0];
    let mut o = match kind {
        "flat" => DoubleOptions::flat(0),
        "wh" | "whitehead" => DoubleOptions::whitehead(0, Clasp::Positive),
        _ => return Err(ParseError::new(1, at + 1, format!("unknown double kind {kind:?} (use flat or wh)"))),
    };
    for &(item, at) in &items[1..] {
        let (key, value) = match item.split_once('=') {
            Some((k, v)) => (k.trim(), Some((v.trim(), at + k.len() + 1))),
            None => (item, None),
        };
        let value = |what: &str| value.ok_or_else(|| ParseError::new(1, at + 1, format!("`{key}` needs {what}")));
        match key {
            "n" => {
                let (v, at) = value("a twist count")?;
                o.full_twists = number(v, at)?;
            }
            "clasp" => {
                if o.clasp.is_none() {
                    return Err(ParseError::new(1, at + 1, "a flat double has no clasp"));
                }
                let (v, at) = value("`+` or `-`")?;
                o.clasp = Some(match v {
                    "+" => Clasp::Positive,
                    "-" => Clasp::Negative,
                    _ => return Err(ParseError::new(1, at + 1, format!("clasp must be `+` or `-`, found {v:?}"))),
                });
            }
            "site" => {
                let (v, at) = value("an arc label")?;
                o.site = Some(number(v, at)?);
            }
            "hidden" => o.hidden_twists = true,
            _ => return Err(ParseError::new(1, at + 1, format!("unknown double option {key:?}"))),
        }
    }
    Ok(o)
}

/// Applies a double; flat doubles of links double every component.
pub fn apply_double(d: &Diagram, o: &DoubleOptions) -> Result<Diagram, Error> {
    if o.clasp.is_none() && d.component_count() > 1 && !o.hidden_twists && o.site.is_none() {
        flat_double_link(d, o.full_twists)
    } else {
        double(d, o)
    }
}

fn transform(d: Diagram, p: &Piece) -> Result<Diagram, ParseError> {
    let out = match p.name {
        "mirror" => {
            p.no_args()?;
            Ok(d.mirror())
        }
        "switch" => d.switch(p.one()?),
        "smooth" => d.smooth(p.one()?),
        "reverse" => {
            let which: Vec<usize> = match p.args {
                None => (0..d.component_count()).collect(),
                Some(_) => p.ints()?,
            };
            if let Some(&k) = which.iter().find(|&&k| k >= d.component_count()) {
                return Err(p.err(format!("no component {k}")));
            }
            Ok(d.reverse_components(&which))
        }
        "twist" | "full" => {
            let items = p.require_args()?;
            let i: usize = number(items[0].0, items[0].1)?;
            let ax = match items.get(1) {
                Some(&(s, at)) => axis(s, at)?,
                None => TwistAxis::Antiparallel,
            };
            if items.len() > 2 {
                return Err(p.err(format!("`{}` takes a crossing and an axis", p.name)));
            }
            if p.name == "twist" { twist_replace(&d, i, ax) } else { half_to_full(&d, i, ax) }
        }
        "double" => apply_double(&d, &double_options(p)?),
        other => return Err(p.err(format!("unknown transform `{other}`"))),
    };
    out.map_err(|e| p.err(e.to_string()))
}

/// Builds the diagram described by a spec string.
pub fn parse_spec(spec: &str) -> Result<Diagram, ParseError> {
    let ps = pieces(spec);
    if ps[0].name.is_empty() {
        return Err(ParseError::new(1, 1, "empty spec"));
    }
    let mut d = base(&ps[0])?;
    for p in &ps[1..] {
        d = transform(d, p)?;
    }
    Ok(d)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn families() {
        assert_eq!(parse_spec("pretzel:3,1,1").unwrap().crossing_count(), 5);
        assert_eq!(parse_spec("torus2:5").unwrap().crossing_count(), 5);
        assert_eq!(parse_spec("fourplat:2,1,1").unwrap().crossing_count(), 4);
        assert_eq!(parse_spec("braid:3:1,-2,1,-2").unwrap().crossing_count(), 4);
        assert_eq!(parse_spec("unlink:3").unwrap().component_count(), 3);
        assert_eq!(parse_spec("unknot").unwrap(), Diagram::unknot());
    }

    #[test]
    fn transforms() {
        let d = parse_spec("torus2:3/double:flat,n=0").unwrap();
        assert_eq!((d.crossing_count(), d.component_count()), (12, 2));
        let d = parse_spec("torus2:3 / double:wh,n=1,clasp=-").unwrap();
        assert_eq!((d.crossing_count(), d.component_count()), (16, 1));
        let d = parse_spec("braid:3:1,-2,1,-2,1,-2/double:flat").unwrap();
        assert_eq!(d.component_count(), 6);
        assert!(parse_spec("torus2:3/mirror").unwrap().is_isomorphic(&parse_spec("fourplat:1,1,1").unwrap()));
        assert_eq!(parse_spec("torus2:3/twist:0,parallel").unwrap().crossing_count(), 5);
        assert_eq!(parse_spec("torus2:3/full:0,a").unwrap().crossing_count(), 4);
        assert_eq!(parse_spec("torus2:3/smooth:1").unwrap().crossing_count(), 2);
        assert_eq!(parse_spec("torus2:4/reverse:1").unwrap().writhe(), -4);
        let o = parse_double_options("wh,n=-2,clasp=-,site=4,hidden").unwrap();
        assert_eq!((o.full_twists, o.clasp, o.site, o.hidden_twists), (-2, Some(Clasp::Negative), Some(4), true));
    }

    #[test]
    fn errors_point_at_the_problem() {
        let col = |s: &str| parse_spec(s).unwrap_err().col;
        assert_eq!(col("pretzel:3,x,1"), 11);
        assert_eq!(col("torus2:3/double:flat,n=q"), 24);
        assert_eq!(col("torus2:3/double:flat,clasp=+"), 22);
        assert_eq!(col("torus2:3/spin"), 10);
        assert_eq!(col("knot:3"), 1);
        assert_eq!(col("torus2:3/switch:7"), 10);
        assert_eq!(col("double:flat,n=0"), 1);
        assert!(parse_spec("").is_err());
        assert!(parse_spec("torus2:4/double:wh").unwrap_err().message.contains("2 components"));
    }
}
