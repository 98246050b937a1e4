//! A small expression language for building posets from named families and
//! the composition operators.
//!
//! Grammar (ASCII only):
//!
//! ```text
//! expr    := sum ;
//! sum     := prod { ("+" | "oplus" | "glue") prod } ;
//! prod    := atom { ("*" | "otimes") atom } ;
//! atom    := call | literal | "(" expr ")" ;
//! call    := IDENT "(" args ")" | IDENT ;
//! args    := (INT | expr) { "," (INT | expr) } ;
//! literal := "poset" "{" "n=" INT ";" { INT "<" INT ";" } "}" ;
//! ```
//!
//! Binary operators of equal precedence associate left; products bind
//! tighter than sums. Builders: `chain`/`I`, `antichain`, `boolean`,
//! `ferrers`, `v`, `diamond`, `bar_kk`, plus the function forms `dual`,
//! `pow_oplus`, `pow_glue` and `glue`.

mod lexer;
mod parser;

pub use parser::parse;

use crate::builders;
use crate::error::{Error, Result};
use crate::ops;
use crate::partitions::Partition;
use crate::poset::Poset;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Builder {
    Chain(usize),
    Antichain(usize),
    Boolean(usize),
    Ferrers(Vec<usize>),
    V,
    Diamond,
    BarKk(usize),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BinOp {
    DirectSum,
    OrdinalSum,
    Glue,
    DirectProduct,
    OrdinalProduct,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PowerKind {
    OrdinalSum,
    Glue,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PosetExpr {
    Leaf(Builder),
    Dual(Box<PosetExpr>),
    Binary { op: BinOp, lhs: Box<PosetExpr>, rhs: Box<PosetExpr> },
    Power { kind: PowerKind, base: Box<PosetExpr>, k: usize },
    Literal { n: usize, covers: Vec<(usize, usize)> },
}

impl PosetExpr {
    pub fn binary(op: BinOp, lhs: PosetExpr, rhs: PosetExpr) -> PosetExpr {
        PosetExpr::Binary { op, lhs: Box::new(lhs), rhs: Box::new(rhs) }
    }
}

/// Evaluate an expression tree to a poset.
pub fn eval_expr(expr: &PosetExpr) -> Result<Poset> {
    match expr {
        PosetExpr::Leaf(builder) => match builder {
            Builder::Chain(k) => Ok(builders::chain(*k)),
            Builder::Antichain(k) => Ok(builders::antichain(*k)),
            Builder::Boolean(m) => builders::boolean(*m),
            Builder::Ferrers(parts) => Ok(builders::ferrers(&Partition::new(parts)?)),
            Builder::V => Ok(builders::v_poset()),
            Builder::Diamond => Ok(builders::diamond()),
            Builder::BarKk(k) => builders::bar_kk(*k),
        },
        PosetExpr::Dual(inner) => Ok(ops::dual(&eval_expr(inner)?)),
        PosetExpr::Binary { op, lhs, rhs } => {
            let (p, q) = (eval_expr(lhs)?, eval_expr(rhs)?);
            match op {
                BinOp::DirectSum => Ok(ops::direct_sum(&p, &q)),
                BinOp::OrdinalSum => Ok(ops::ordinal_sum(&p, &q)),
                BinOp::Glue => ops::glue(&p, &q),
                BinOp::DirectProduct => Ok(ops::direct_product(&p, &q)),
                BinOp::OrdinalProduct => Ok(ops::ordinal_product(&p, &q)),
            }
        }
        PosetExpr::Power { kind, base, k } => {
            let p = eval_expr(base)?;
            match kind {
                PowerKind::OrdinalSum => ops::ordinal_power(&p, *k),
                PowerKind::Glue => ops::glue_power(&p, *k),
            }
        }
        PosetExpr::Literal { n, covers } => Poset::from_covers(*n, covers),
    }
}

/// Parse and evaluate in one step.
pub fn eval_text(text: &str) -> Result<Poset> {
    eval_expr(&parse(text)?)
}

impl std::fmt::Display for PosetExpr {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            PosetExpr::Leaf(b) => match b {
                Builder::Chain(k) => write!(f, "chain({k})"),
                Builder::Antichain(k) => write!(f, "antichain({k})"),
                Builder::Boolean(m) => write!(f, "boolean({m})"),
                Builder::Ferrers(parts) => {
                    write!(f, "ferrers(")?;
                    for (i, p) in parts.iter().enumerate() {
                        if i > 0 {
                            write!(f, ",")?;
                        }
                        write!(f, "{p}")?;
                    }
                    write!(f, ")")
                }
                Builder::V => write!(f, "v"),
                Builder::Diamond => write!(f, "diamond"),
                Builder::BarKk(k) => write!(f, "bar_kk({k})"),
            },
            PosetExpr::Dual(inner) => write!(f, "dual({inner})"),
            PosetExpr::Binary { op, lhs, rhs } => {
                let sym = match op {
                    BinOp::DirectSum => "+",
                    BinOp::OrdinalSum => "oplus",
                    BinOp::Glue => "glue",
                    BinOp::DirectProduct => "*",
                    BinOp::OrdinalProduct => "otimes",
                };
                write!(f, "({lhs} {sym} {rhs})")
            }
            PosetExpr::Power { kind, base, k } => {
                let name = match kind {
                    PowerKind::OrdinalSum => "pow_oplus",
                    PowerKind::Glue => "pow_glue",
                };
                write!(f, "{name}({base}, {k})")
            }
            PosetExpr::Literal { n, covers } => {
                write!(f, "poset{{n={n};")?;
                for (a, b) in covers {
                    write!(f, " {a}<{b};")?;
                }
                write!(f, "}}")
            }
        }
    }
}

/// Validate builder arity and parameter kinds; called by the parser.
pub(crate) fn make_leaf(name: &str, args: Vec<parser::Arg>) -> Result<PosetExpr> {
    use parser::Arg;
    let ints = || -> Result<Vec<usize>> {
        args.iter()
            .map(|a| match a {
                Arg::Int(v) => usize::try_from(*v)
                    .map_err(|_| Error::Arity(format!("{name}: parameter too large"))),
                Arg::Expr(_) => {
                    Err(Error::Arity(format!("{name} takes integer parameters only")))
                }
            })
            .collect()
    };
    let one_int = |name: &str| -> Result<usize> {
        let list = ints()?;
        if list.len() != 1 {
            return Err(Error::Arity(format!(
                "{name} takes exactly one integer, got {} arguments",
                list.len()
            )));
        }
        Ok(list[0])
    };
    match name {
        "chain" | "I" => Ok(PosetExpr::Leaf(Builder::Chain(one_int(name)?))),
        "antichain" => Ok(PosetExpr::Leaf(Builder::Antichain(one_int(name)?))),
        "boolean" => Ok(PosetExpr::Leaf(Builder::Boolean(one_int(name)?))),
        "bar_kk" => Ok(PosetExpr::Leaf(Builder::BarKk(one_int(name)?))),
        "ferrers" => {
            let parts = ints()?;
            if parts.is_empty() {
                return Err(Error::Arity("ferrers needs at least one part".into()));
            }
            Partition::new(&parts)?;
            Ok(PosetExpr::Leaf(Builder::Ferrers(parts)))
        }
        "v" | "diamond" => Err(Error::Arity(format!("{name} takes no arguments"))),
        "dual" => match args.as_slice() {
            [Arg::Expr(inner)] => Ok(PosetExpr::Dual(Box::new(inner.clone()))),
            _ => Err(Error::Arity("dual takes exactly one expression".into())),
        },
        "glue" => match args.as_slice() {
            [Arg::Expr(lhs), Arg::Expr(rhs)] => {
                Ok(PosetExpr::binary(BinOp::Glue, lhs.clone(), rhs.clone()))
            }
            _ => Err(Error::Arity("glue takes exactly two expressions".into())),
        },
        "pow_oplus" | "pow_glue" => {
            let kind = if name == "pow_oplus" { PowerKind::OrdinalSum } else { PowerKind::Glue };
            match args.as_slice() {
                [Arg::Expr(base), Arg::Int(k)] => {
                    let k = usize::try_from(*k)
                        .map_err(|_| Error::Arity(format!("{name}: power too large")))?;
                    if k == 0 {
                        return Err(Error::Arity(format!("{name} needs k ≥ 1")));
                    }
                    Ok(PosetExpr::Power { kind, base: Box::new(base.clone()), k })
                }
                _ => Err(Error::Arity(format!(
                    "{name} takes an expression and an integer power"
                ))),
            }
        }
        other => Err(Error::Arity(format!("unknown builder '{other}'"))),
    }
}

/// Bare identifiers valid without arguments.
pub(crate) fn make_bare(name: &str) -> Result<PosetExpr> {
    match name {
        "v" => Ok(PosetExpr::Leaf(Builder::V)),
        "diamond" => Ok(PosetExpr::Leaf(Builder::Diamond)),
        other => Err(Error::Arity(format!(
            "builder '{other}' requires arguments (write {other}(...))"
        ))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::extensions::ehr_series;
    use crate::iso::is_isomorphic;
    use crate::poly::IntPoly;

    #[test]
    fn leaf_examples() {
        let e = parse("chain(3)").unwrap();
        assert_eq!(e, PosetExpr::Leaf(Builder::Chain(3)));
        assert_eq!(eval_expr(&e).unwrap().size(), 3);
    }

    #[test]
    fn sandwich_expression() {
        let p = eval_text("I(1) oplus (I(1) + I(1)) oplus I(1)").unwrap();
        let s = ehr_series(&p).unwrap();
        assert_eq!(s.hstar, IntPoly::from_i64(&[1, 1]));
        assert_eq!(s.denom_exp, 5);
    }

    #[test]
    fn radio_tower_power() {
        let p = eval_text("pow_oplus(antichain(2), 4)").unwrap();
        let s = ehr_series(&p).unwrap();
        assert_eq!(s.hstar, IntPoly::from_i64(&[1, 1]).pow(4));
        assert_eq!(s.denom_exp, 9);
    }

    #[test]
    fn ferrers_and_glue_eval() {
        assert_eq!(eval_text("ferrers(4,3,3,2,1)").unwrap().size(), 13);
        // gluing two 8-element boolean lattices identifies one element
        assert_eq!(eval_text("glue(boolean(3), boolean(3))").unwrap().size(), 15);
    }

    #[test]
    fn dual_product_isomorphism() {
        let lhs = eval_text("dual(chain(2) * chain(2))").unwrap();
        let rhs = eval_text("diamond").unwrap();
        assert!(is_isomorphic(&lhs, &rhs, 10).unwrap());
    }

    #[test]
    fn precedence_golden_asts() {
        // equal-precedence sums associate left
        let e = parse("v + diamond oplus v").unwrap();
        let want = PosetExpr::binary(
            BinOp::OrdinalSum,
            PosetExpr::binary(
                BinOp::DirectSum,
                PosetExpr::Leaf(Builder::V),
                PosetExpr::Leaf(Builder::Diamond),
            ),
            PosetExpr::Leaf(Builder::V),
        );
        assert_eq!(e, want);
        // products bind tighter than sums
        let e = parse("v + diamond * v").unwrap();
        let want = PosetExpr::binary(
            BinOp::DirectSum,
            PosetExpr::Leaf(Builder::V),
            PosetExpr::binary(
                BinOp::DirectProduct,
                PosetExpr::Leaf(Builder::Diamond),
                PosetExpr::Leaf(Builder::V),
            ),
        );
        assert_eq!(e, want);
    }

    #[test]
    fn literal_form() {
        let p = eval_text("poset{n=4; 0<1; 1<2; 1<3}").unwrap();
        assert_eq!(p.size(), 4);
        assert_eq!(p.covers().len(), 3);
        // trailing semicolon also accepted
        let q = eval_text("poset{n=4; 0<1; 1<2; 1<3;}").unwrap();
        assert_eq!(p, q);
    }

    #[test]
    fn arity_errors() {
        assert!(matches!(parse("chain()"), Err(Error::Syntax { .. })));
        assert!(matches!(parse("chain(1, 2)"), Err(Error::Arity(_))));
        assert!(matches!(parse("chain(v)"), Err(Error::Arity(_))));
        assert!(matches!(parse("v(1)"), Err(Error::Arity(_))));
        assert!(matches!(parse("nosuch(1)"), Err(Error::Arity(_))));
        assert!(matches!(parse("pow_oplus(v, 0)"), Err(Error::Arity(_))));
    }

    #[test]
    fn syntax_errors_carry_position() {
        match parse("chain(3") {
            Err(Error::Syntax { line, col, .. }) => {
                assert_eq!(line, 1);
                assert!(col >= 7);
            }
            other => panic!("expected syntax error, got {other:?}"),
        }
    }

    #[test]
    fn display_roundtrip_examples() {
        for text in [
            "chain(3)",
            "pow_glue(boolean(3), 2)",
            "dual((v + diamond) otimes chain(2))",
            "poset{n=3; 0<1; 0<2}",
            "v glue dual(v)",
            "ferrers(3,2,1) * I(2)",
        ] {
            let ast = parse(text).unwrap();
            let printed = ast.to_string();
            let reparsed = parse(&printed).unwrap();
            assert_eq!(ast, reparsed, "text {text} printed {printed}");
        }
    }
}
