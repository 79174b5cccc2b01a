//! Parser for the s-expression syntax, e.g. `(join (points 3) (points 3))`.

use crate::error::{Error, Result};

use super::L2Expr;

#[derive(Debug)]
enum Tree {
    Atom(String, usize),
    List(Vec<Tree>, usize),
}

fn tokenize(text: &str) -> Vec<(String, usize)> {
    let mut out = Vec::new();
    let mut cur = String::new();
    let mut start = 0;
    for (i, c) in text.char_indices() {
        if c == '(' || c == ')' || c.is_whitespace() {
            if !cur.is_empty() {
                out.push((std::mem::take(&mut cur), start));
            }
            if !c.is_whitespace() {
                out.push((c.to_string(), i));
            }
        } else {
            if cur.is_empty() {
                start = i;
            }
            cur.push(c);
        }
    }
    if !cur.is_empty() {
        out.push((cur, start));
    }
    out
}

fn parse_tree(tokens: &[(String, usize)], pos: &mut usize) -> Result<Tree> {
    let (tok, at) = tokens.get(*pos).ok_or_else(|| Error::Parse("unexpected end of expression".into()))?;
    *pos += 1;
    match tok.as_str() {
        "(" => {
            let mut items = Vec::new();
            loop {
                match tokens.get(*pos) {
                    None => return Err(Error::Parse(format!("unclosed parenthesis at offset {at}"))),
                    Some((t, _)) if t == ")" => {
                        *pos += 1;
                        return Ok(Tree::List(items, *at));
                    }
                    Some(_) => items.push(parse_tree(tokens, pos)?),
                }
            }
        }
        ")" => Err(Error::Parse(format!("unexpected `)` at offset {at}"))),
        _ => Ok(Tree::Atom(tok.clone(), *at)),
    }
}

fn number(t: &Tree) -> Result<usize> {
    match t {
        Tree::Atom(s, at) => s.parse().map_err(|_| Error::Parse(format!("expected a number at offset {at}, got `{s}`"))),
        Tree::List(_, at) => Err(Error::Parse(format!("expected a number at offset {at}"))),
    }
}

fn build(t: &Tree) -> Result<L2Expr> {
    let (items, at) = match t {
        Tree::List(items, at) => (items, *at),
        Tree::Atom(s, at) => return Err(Error::Parse(format!("expected `(`, got `{s}` at offset {at}"))),
    };
    let Some(Tree::Atom(head, _)) = items.first() else {
        return Err(Error::Parse(format!("expected a constructor name at offset {at}")));
    };
    let args = &items[1..];
    let arity = |n: usize| {
        if args.len() == n {
            Ok(())
        } else {
            Err(Error::Parse(format!("`{head}` takes {n} argument(s), got {} at offset {at}", args.len())))
        }
    };
    let expr = match head.as_str() {
        "empty" => {
            arity(0)?;
            L2Expr::Empty
        }
        "simplex" => {
            arity(1)?;
            L2Expr::Simplex(number(&args[0])?)
        }
        "points" => {
            arity(1)?;
            L2Expr::Points(number(&args[0])?)
        }
        "gon" => {
            arity(1)?;
            L2Expr::MGon(number(&args[0])?)
        }
        "cone" => {
            arity(1)?;
            L2Expr::cone(build(&args[0])?)
        }
        "susp" => {
            arity(1)?;
            L2Expr::susp(build(&args[0])?)
        }
        "join" | "union" => {
            if args.len() < 2 {
                return Err(Error::Parse(format!("`{head}` needs at least 2 arguments at offset {at}")));
            }
            let parts = args.iter().map(build).collect::<Result<Vec<_>>>()?;
            if head == "join" {
                L2Expr::join_all(parts)
            } else {
                L2Expr::union_all(parts)
            }
        }
        "double" => {
            arity(2)?;
            let v = match &args[1] {
                Tree::Atom(s, _) => s.clone(),
                Tree::List(_, a) => return Err(Error::Parse(format!("expected a vertex label at offset {a}"))),
            };
            L2Expr::double(build(&args[0])?, v)
        }
        "planar" => {
            if args.is_empty() {
                return Err(Error::Parse(format!("`planar` needs a genus at offset {at}")));
            }
            let g = number(&args[0])?;
            let ms = args[1..].iter().map(number).collect::<Result<Vec<_>>>()?;
            L2Expr::PlanarHoles(g, ms)
        }
        other => return Err(Error::Parse(format!("unknown constructor `{other}` at offset {at}"))),
    };
    Ok(expr)
}

/// Parses and validates an expression.
pub fn parse_expr(text: &str) -> Result<L2Expr> {
    let tokens = tokenize(text);
    let mut pos = 0;
    let tree = parse_tree(&tokens, &mut pos)?;
    if pos != tokens.len() {
        return Err(Error::Parse(format!("trailing input at offset {}", tokens[pos].1)));
    }
    let e = build(&tree)?;
    e.validate()?;
    Ok(e)
}
