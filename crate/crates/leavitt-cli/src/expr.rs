//! The expression language for algebra elements.
//!
//! Grammar:
//!
//! ```text
//! expr   := term ((+|-) term)*
//! term   := [coeff] factor+
//! factor := ident [*]
//! coeff  := [-]digits[/digits]
//! ```
//!
//! Factors multiply left to right, the ghost marker `*` is postfix on edge
//! identifiers only (vertices are selfadjoint, so the syntax omits a star
//! for them), and a product that evaluates to zero is a value, not an
//! error.  Parsing first builds an [`ExprAst`], which is then evaluated
//! against a graph and coefficient ring; identifiers resolve at evaluation
//! time.

use std::sync::Arc;

use num_bigint::BigInt;

use leavitt_core::algebra::{Element, GeneratorKind};
use leavitt_core::error::{Error, Result};
use leavitt_core::graph::Graph;
use leavitt_core::ring::{RingDescriptor, RingElement};

/// A parsed expression: a sum of signed terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExprAst {
    pub terms: Vec<Term>,
}

/// One summand: an optional coefficient literal times a nonempty factor
/// sequence.  `negated` records a `-` separator in front of the term.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Term {
    pub negated: bool,
    pub coefficient: Option<CoeffLiteral>,
    pub factors: Vec<Factor>,
}

/// An unresolved coefficient literal `[-]digits[/digits]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoeffLiteral {
    pub negative: bool,
    pub numerator: String,
    pub denominator: Option<String>,
}

/// A vertex or edge identifier, with an optional ghost marker (edges only;
/// checked at evaluation time).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Factor {
    pub name: String,
    pub ghost: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
enum Token {
    Plus,
    Minus,
    Number {
        digits: String,
        denom: Option<String>,
    },
    Ident {
        name: String,
        starred: bool,
    },
}

fn parse_error(msg: impl Into<String>) -> Error {
    Error::Parse {
        line: 1,
        msg: msg.into(),
    }
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut tokens = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        if c.is_whitespace() {
            chars.next();
        } else if c == '+' {
            chars.next();
            tokens.push(Token::Plus);
        } else if c == '-' {
            chars.next();
            tokens.push(Token::Minus);
        } else if c.is_ascii_digit() {
            let mut digits = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_digit() {
                    digits.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            let denom = if chars.peek() == Some(&'/') {
                chars.next();
                let mut den = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_digit() {
                        den.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                if den.is_empty() {
                    return Err(parse_error("expected digits after `/`"));
                }
                Some(den)
            } else {
                None
            };
            tokens.push(Token::Number { digits, denom });
        } else if c.is_ascii_alphabetic() {
            let mut name = String::new();
            while let Some(&d) = chars.peek() {
                if d.is_ascii_alphanumeric() || d == '_' {
                    name.push(d);
                    chars.next();
                } else {
                    break;
                }
            }
            let starred = if chars.peek() == Some(&'*') {
                chars.next();
                true
            } else {
                false
            };
            tokens.push(Token::Ident { name, starred });
        } else {
            return Err(parse_error(format!("unexpected character `{c}`")));
        }
    }
    Ok(tokens)
}

/// Parses expression text into its AST without resolving identifiers.
pub fn parse(text: &str) -> Result<ExprAst> {
    let tokens = tokenize(text)?;
    if tokens.is_empty() {
        return Err(parse_error("empty expression"));
    }
    let mut terms = Vec::new();
    let mut pos = 0;
    let mut negated = false;
    loop {
        let mut coefficient = None;
        if let Some(Token::Minus) = tokens.get(pos) {
            // a sign inside a term must introduce a numeric literal
            let Some(Token::Number { digits, denom }) = tokens.get(pos + 1) else {
                return Err(parse_error("expected a number after `-`"));
            };
            coefficient = Some(CoeffLiteral {
                negative: true,
                numerator: digits.clone(),
                denominator: denom.clone(),
            });
            pos += 2;
        } else if let Some(Token::Number { digits, denom }) = tokens.get(pos) {
            coefficient = Some(CoeffLiteral {
                negative: false,
                numerator: digits.clone(),
                denominator: denom.clone(),
            });
            pos += 1;
        }

        let mut factors = Vec::new();
        while let Some(Token::Ident { name, starred }) = tokens.get(pos) {
            factors.push(Factor {
                name: name.clone(),
                ghost: *starred,
            });
            pos += 1;
        }
        if factors.is_empty() {
            return Err(parse_error("expected an identifier"));
        }
        terms.push(Term {
            negated,
            coefficient,
            factors,
        });

        match tokens.get(pos) {
            None => break,
            Some(Token::Plus) => {
                negated = false;
                pos += 1;
            }
            Some(Token::Minus) => {
                negated = true;
                pos += 1;
            }
            Some(other) => {
                return Err(parse_error(format!("unexpected token {other:?}")));
            }
        }
    }
    Ok(ExprAst { terms })
}

fn literal_value(ring: RingDescriptor, lit: &CoeffLiteral) -> Result<RingElement> {
    let mut num: BigInt = lit
        .numerator
        .parse()
        .map_err(|_| parse_error(format!("bad integer literal `{}`", lit.numerator)))?;
    if lit.negative {
        num = -num;
    }
    match &lit.denominator {
        None => Ok(RingElement::from_bigint(ring, num)),
        Some(den_digits) => {
            let literal = format!(
                "{}{}/{den_digits}",
                if lit.negative { "-" } else { "" },
                lit.numerator
            );
            if ring != RingDescriptor::Rationals {
                return Err(Error::BadCoefficient { literal, ring });
            }
            let den: BigInt = den_digits
                .parse()
                .map_err(|_| parse_error(format!("bad integer literal `{den_digits}`")))?;
            if den == BigInt::from(0) {
                return Err(Error::BadCoefficient { literal, ring });
            }
            RingElement::rational(num, den)
        }
    }
}

fn factor_element(graph: &Arc<Graph>, ring: RingDescriptor, factor: &Factor) -> Result<Element> {
    if graph.vertex_id(&factor.name).is_some() {
        if factor.ghost {
            return Err(parse_error(format!(
                "vertex `{}` admits no ghost marker",
                factor.name
            )));
        }
        Element::generator(graph, ring, GeneratorKind::Vertex, &factor.name)
    } else if graph.edge_id(&factor.name).is_some() {
        let kind = if factor.ghost {
            GeneratorKind::GhostEdge
        } else {
            GeneratorKind::Edge
        };
        Element::generator(graph, ring, kind, &factor.name)
    } else {
        Err(Error::UnknownIdentifier(factor.name.clone()))
    }
}

/// Resolves identifiers and evaluates the AST to a canonical element.
pub fn eval(ast: &ExprAst, graph: &Arc<Graph>, ring: RingDescriptor) -> Result<Element> {
    let mut acc = Element::zero(graph, ring);
    for term in &ast.terms {
        let coeff = match &term.coefficient {
            Some(lit) => literal_value(ring, lit)?,
            None => ring.one(),
        };
        let mut value: Option<Element> = None;
        for factor in &term.factors {
            let elem = factor_element(graph, ring, factor)?;
            value = Some(match value {
                None => elem,
                Some(v) => v.mul(&elem)?,
            });
        }
        let mut value = value
            .expect("parser guarantees at least one factor")
            .scale(&coeff)?;
        if term.negated {
            value = value.neg();
        }
        acc = acc.add(&value)?;
    }
    Ok(acc)
}

/// Parses and evaluates in one step.
pub fn parse_expr(text: &str, graph: &Arc<Graph>, ring: RingDescriptor) -> Result<Element> {
    eval(&parse(text)?, graph, ring)
}

#[cfg(test)]
mod tests {
    use super::*;
    use leavitt_core::fixtures;

    const Z: RingDescriptor = RingDescriptor::Integers;

    fn arc(name: &str) -> Arc<Graph> {
        Arc::new(fixtures::graph(name))
    }

    #[test]
    fn ast_structure() {
        let ast = parse("2 e f* + 3 v - w").unwrap();
        assert_eq!(ast.terms.len(), 3);
        assert_eq!(
            ast.terms[0].coefficient,
            Some(CoeffLiteral {
                negative: false,
                numerator: "2".into(),
                denominator: None,
            })
        );
        assert_eq!(
            ast.terms[0].factors,
            vec![
                Factor {
                    name: "e".into(),
                    ghost: false
                },
                Factor {
                    name: "f".into(),
                    ghost: true
                },
            ]
        );
        assert!(!ast.terms[1].negated);
        assert!(ast.terms[2].negated);
        assert_eq!(ast.terms[2].coefficient, None);
    }

    #[test]
    fn direct_construction() {
        let r2 = arc("R2");
        let x = parse_expr("2 e f* + 3 v", &r2, Z).unwrap();
        assert_eq!(x.to_string(), "3 v + 2 e f*");
        assert_eq!(x.term_count(), 2);
    }

    #[test]
    fn concatenation() {
        let gl = arc("GL");
        let x = parse_expr("e g", &gl, Z).unwrap();
        assert_eq!(x.to_string(), "e g");
    }

    #[test]
    fn noncomposable_product_is_zero() {
        let gl = arc("GL");
        let x = parse_expr("e e", &gl, Z).unwrap();
        assert!(x.is_zero());
    }

    #[test]
    fn ghost_relation() {
        let r2 = arc("R2");
        let x = parse_expr("e* e", &r2, Z).unwrap();
        assert_eq!(x.to_string(), "v");
    }

    #[test]
    fn signed_and_fractional_coefficients() {
        let r2 = arc("R2");
        let q = RingDescriptor::Rationals;
        let x = parse_expr("-1/2 v + 3/4 e", &r2, q).unwrap();
        assert_eq!(x.to_string(), "-1/2 v + 3/4 e");
        let y = parse_expr("v - 2 e", &r2, Z).unwrap();
        assert_eq!(y.to_string(), "v - 2 e");
    }

    #[test]
    fn errors() {
        let r2 = arc("R2");
        assert!(matches!(
            parse_expr("zz", &r2, Z),
            Err(Error::UnknownIdentifier(_))
        ));
        assert!(matches!(
            parse_expr("1/2 v", &r2, Z),
            Err(Error::BadCoefficient { .. })
        ));
        assert!(matches!(
            parse_expr("v +", &r2, Z),
            Err(Error::Parse { .. })
        ));
        assert!(matches!(parse_expr("", &r2, Z), Err(Error::Parse { .. })));
        assert!(matches!(parse_expr("v*", &r2, Z), Err(Error::Parse { .. })));
        assert!(matches!(parse_expr("2", &r2, Z), Err(Error::Parse { .. })));
        assert!(matches!(
            parse_expr("v $ w", &r2, Z),
            Err(Error::Parse { .. })
        ));
    }
}
