//! The JSON facts file: characters, base forms and declared facts.
//!
//! ```json
//! {
//!   "characters": [{ "name": "chi", "order": 5 }],
//!   "forms": [
//!     { "name": "pi", "type": "icosahedral" },
//!     { "name": "pi^tau", "type": "icosahedral", "conjugate_of": "pi" }
//!   ],
//!   "facts": [
//!     { "lhs": "Ad(pi)", "rhs": "Ad(pi^tau)", "relation": "equiv", "truth": false }
//!   ]
//! }
//! ```
//!
//! Constituents are written as `1`, `pi`, `sym^3(pi)`, `Ad(pi)`, `A4(pi)`,
//! or products of those joined by ` x ` or `⊠`, optionally followed by
//! `@ <character word>` such as `@ chi^2·omega_pi^-1`.

use std::path::Path;

use icosa::isobaric::{CharSymbol, Constituent, Context, CuspType, Fact};
use serde::Deserialize;

use crate::CliError;

#[derive(Clone, Debug, Default, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactsDocument {
    #[serde(default)]
    pub characters: Vec<CharacterDecl>,
    #[serde(default)]
    pub forms: Vec<FormDecl>,
    #[serde(default)]
    pub facts: Vec<FactDecl>,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CharacterDecl {
    pub name: String,
    pub order: Option<u32>,
    /// Known to be non-trivial without a known order.
    #[serde(default)]
    pub nontrivial: bool,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FormDecl {
    pub name: String,
    #[serde(rename = "type")]
    pub kind: String,
    pub conjugate_of: Option<String>,
    pub field: Option<String>,
    pub character: Option<String>,
    pub eta: Option<String>,
    pub mu: Option<String>,
    pub chi0: Option<String>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Relation {
    Equiv,
    TwistEquivBy,
    Cuspidal,
    Automorphic,
    SelfDual,
    DihedralBaseChange,
    MackeySelfTwist,
}

#[derive(Clone, Debug, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactDecl {
    pub lhs: String,
    pub rhs: Option<String>,
    pub relation: Relation,
    pub by: Option<String>,
    #[serde(default = "yes")]
    pub truth: bool,
}

fn yes() -> bool {
    true
}

fn need<'a>(v: &'a Option<String>, what: &str, form: &str) -> Result<&'a str, CliError> {
    v.as_deref()
        .ok_or_else(|| CliError::Facts(format!("form {form} needs `{what}`")))
}

impl FormDecl {
    fn cusp_type(&self) -> Result<CuspType, CliError> {
        let n = &self.name;
        Ok(match self.kind.as_str() {
            "dihedral" => CuspType::Dihedral {
                field: need(&self.field, "field", n)?.into(),
                character: need(&self.character, "character", n)?.into(),
            },
            "tetrahedral" => CuspType::Tetrahedral {
                eta: self.eta.clone().unwrap_or_else(|| format!("eta_{n}")),
            },
            "octahedral" => CuspType::Octahedral {
                mu: self.mu.clone().unwrap_or_else(|| format!("mu_{n}")),
                field: need(&self.field, "field", n)?.into(),
                chi0: need(&self.chi0, "chi0", n)?.into(),
            },
            "icosahedral" => CuspType::Icosahedral,
            "general" => CuspType::General,
            "abstract" | "cuspidal" => CuspType::Abstract,
            other => return Err(CliError::Facts(format!("form {n}: unknown type `{other}`"))),
        })
    }
}

impl FactsDocument {
    pub fn load(path: &Path) -> Result<Self, CliError> {
        let text = std::fs::read_to_string(path).map_err(|e| CliError::Io(format!("{}: {e}", path.display())))?;
        Self::parse(&text)
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Facts(e.to_string()))
    }

    pub fn context(&self) -> Result<Context, CliError> {
        let mut ctx = Context::new();
        for c in &self.characters {
            if c.nontrivial && c.order.is_none() {
                ctx.add_nontrivial_char(&c.name)?;
            } else {
                ctx.add_char(&c.name, c.order)?;
            }
        }
        for f in &self.forms {
            ctx.add_form(&f.name, f.cusp_type()?)?;
        }
        for f in &self.forms {
            if let Some(other) = &f.conjugate_of {
                ctx.set_conjugates(other, &f.name)?;
            }
        }
        for d in &self.facts {
            let fact = d.to_fact(&ctx)?;
            ctx.declare(fact, d.truth)?;
        }
        Ok(ctx)
    }
}

impl FactDecl {
    fn rhs(&self) -> Result<&str, CliError> {
        self.rhs
            .as_deref()
            .ok_or_else(|| CliError::Facts(format!("{:?} fact on `{}` needs `rhs`", self.relation, self.lhs)))
    }

    fn to_fact(&self, ctx: &Context) -> Result<Fact, CliError> {
        Ok(match self.relation {
            Relation::Equiv => Fact::equiv(&parse_constituent(ctx, &self.lhs)?, &parse_constituent(ctx, self.rhs()?)?),
            Relation::TwistEquivBy => {
                let by = self
                    .by
                    .as_deref()
                    .ok_or_else(|| CliError::Facts(format!("twist-equiv-by on `{}` needs `by`", self.lhs)))?;
                let rhs = parse_constituent(ctx, self.rhs.as_deref().unwrap_or(&self.lhs))?;
                Fact::equiv(&parse_constituent(ctx, &self.lhs)?, &rhs.twisted(&parse_char_word(ctx, by)?))
            }
            Relation::Cuspidal => Fact::cuspidal(&parse_constituent(ctx, &self.lhs)?),
            Relation::Automorphic => Fact::automorphic(&parse_constituent(ctx, &self.lhs)?),
            Relation::SelfDual => {
                let c = parse_constituent(ctx, &self.lhs)?;
                Fact::equiv(&c, &ctx.dual(&c)?)
            }
            Relation::DihedralBaseChange => Fact::base_change_dihedral(&self.lhs, self.rhs()?),
            Relation::MackeySelfTwist => ctx.mackey_fact(&self.lhs, self.rhs()?)?,
        })
    }
}

/// Parses `name`, `name^k` words joined by `·` or `*`.
pub fn parse_char_word(ctx: &Context, text: &str) -> Result<CharSymbol, CliError> {
    let text = text.trim();
    if text == "1" {
        return Ok(CharSymbol::trivial());
    }
    let mut out = CharSymbol::trivial();
    for part in text.split(['·', '*']).map(str::trim) {
        let (name, exp) = match part.rsplit_once('^') {
            Some((n, e)) if e.parse::<i64>().is_ok() => (n, e.parse::<i64>().unwrap()),
            _ => (part, 1),
        };
        if name.is_empty() {
            return Err(CliError::Facts(format!("empty character name in `{text}`")));
        }
        out = out.mul(&ctx.char(name)?.pow(exp));
    }
    Ok(out)
}

fn parse_factor(ctx: &Context, text: &str) -> Result<Constituent, CliError> {
    let text = text.trim();
    let inner = |prefix: &str| {
        text.strip_prefix(prefix)
            .and_then(|r| r.strip_suffix(')'))
            .map(str::trim)
    };
    if text == "1" {
        return Ok(Constituent::one());
    }
    if let Some(f) = inner("Ad(") {
        return Ok(ctx.ad(f)?);
    }
    if let Some(f) = inner("A4(") {
        return Ok(ctx.a4_symbol(f)?);
    }
    if let Some(rest) = text.strip_prefix("sym^") {
        let (n, f) = rest
            .split_once('(')
            .and_then(|(n, f)| Some((n.trim().parse::<u32>().ok()?, f.strip_suffix(')')?.trim())))
            .ok_or_else(|| CliError::Facts(format!("cannot parse `{text}`")))?;
        return Ok(ctx.sym(n, f)?);
    }
    Ok(ctx.base(text)?)
}

/// Parses a constituent such as `sym^3(pi) x pi^tau @ chi`.
pub fn parse_constituent(ctx: &Context, text: &str) -> Result<Constituent, CliError> {
    let (body, twist) = match text.split_once('@') {
        Some((b, t)) => (b, parse_char_word(ctx, t)?),
        None => (text, CharSymbol::trivial()),
    };
    let mut parts = std::collections::BTreeMap::new();
    let mut acc = twist;
    for factor in body.split('⊠').flat_map(|s| s.split(" x ")) {
        let c = parse_factor(ctx, factor)?;
        for (f, n) in c.atom.parts() {
            if parts.insert(f.to_string(), n).is_some() {
                return Err(CliError::Facts(format!("form {f} repeated in `{text}`")));
            }
        }
        acc = acc.mul(&c.twist);
    }
    Ok(Constituent::new(icosa::isobaric::Atom::from_parts(parts), acc))
}

#[cfg(test)]
mod tests {
    use super::*;

    const DOC: &str = r#"{
        "characters": [{ "name": "chi", "order": 5 }],
        "forms": [
            { "name": "pi", "type": "icosahedral" },
            { "name": "pi^tau", "type": "icosahedral", "conjugate_of": "pi" },
            { "name": "d", "type": "dihedral", "field": "K", "character": "psi" }
        ],
        "facts": [
            { "lhs": "Ad(pi)", "rhs": "Ad(pi^tau)", "relation": "equiv", "truth": false },
            { "lhs": "sym^6(pi)", "relation": "cuspidal" }
        ]
    }"#;

    #[test]
    fn builds_a_context() {
        let ctx = FactsDocument::parse(DOC).unwrap().context().unwrap();
        assert_eq!(ctx.form("pi").unwrap().conjugate.as_deref(), Some("pi^tau"));
        assert_eq!(ctx.ledger().len(), 2);
        assert!(ctx.form("pi_K").is_ok());
    }

    #[test]
    fn parses_constituents() {
        let ctx = FactsDocument::parse(DOC).unwrap().context().unwrap();
        let c = parse_constituent(&ctx, "sym^3(pi) x pi^tau @ chi^2").unwrap();
        assert_eq!(c.degree(), 8);
        assert_eq!(c.to_string(), "(sym^3(pi) ⊠ pi^tau) ⊗ chi^2");
        let ad = parse_constituent(&ctx, "Ad(pi)").unwrap();
        assert_eq!(ad, ctx.ad("pi").unwrap());
        let w = parse_char_word(&ctx, "omega_pi^tau^-1").unwrap();
        assert_eq!(w, ctx.omega("pi^tau").unwrap().inv());
        assert!(parse_constituent(&ctx, "pi x pi").is_err());
        assert!(parse_constituent(&ctx, "sym^x(pi)").is_err());
    }

    #[test]
    fn rejects_contradictions_and_unknown_fields() {
        let bad = r#"{ "forms": [{ "name": "pi", "type": "general" }],
            "facts": [
                { "lhs": "sym^3(pi)", "relation": "cuspidal" },
                { "lhs": "sym^3(pi)", "relation": "cuspidal", "truth": false }
            ] }"#;
        assert!(FactsDocument::parse(bad).unwrap().context().is_err());
        assert!(FactsDocument::parse(r#"{ "form": [] }"#).is_err());
    }
}
