//! The endomorphism operad of a finite set: arity-`k` operations are all
//! functions `Xᵏ → X`, stored as value tables.

use serde::Serialize;

use super::axioms::{LawReport, Operad, Status};
use crate::braid::Permutation;
use crate::error::{Error, Result};

/// Largest carrier handled.
pub const MAX_CARRIER: usize = 4;

/// A function `Xᵏ → X` on `X = {0, …, s-1}`. Entry `t` of the table is the
/// value at the tuple whose base-`s` digits (first argument most
/// significant) spell `t`.
#[derive(Clone, PartialEq, Eq, Hash, Serialize)]
pub struct EndTable {
    pub arity: usize,
    pub values: Vec<u8>,
}

impl std::fmt::Debug for EndTable {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "End{}{:?}", self.arity, self.values)
    }
}

#[derive(Debug, Clone, Copy)]
pub struct FiniteEndOperad {
    pub carrier: usize,
}

impl FiniteEndOperad {
    pub fn new(carrier: usize) -> Result<Self> {
        if carrier == 0 || carrier > MAX_CARRIER {
            return Err(Error::UnsupportedSize {
                n: carrier,
                min: 1,
                max: MAX_CARRIER,
            });
        }
        Ok(Self { carrier })
    }

    pub fn table(&self, arity: usize, values: Vec<u8>) -> Result<EndTable> {
        let len = self.carrier.pow(arity as u32);
        if values.len() != len || values.iter().any(|&v| v as usize >= self.carrier) {
            return Err(Error::BadTable {
                arity,
                carrier: self.carrier,
                found: values.len(),
            });
        }
        Ok(EndTable { arity, values })
    }

    pub fn from_fn(&self, arity: usize, f: impl Fn(&[u8]) -> u8) -> EndTable {
        let len = self.carrier.pow(arity as u32);
        let values = (0..len).map(|t| f(&self.digits(t, arity))).collect();
        EndTable { arity, values }
    }

    /// Every function of the given arity.
    pub fn all_tables(&self, arity: usize) -> Vec<EndTable> {
        let len = self.carrier.pow(arity as u32);
        let count = self.carrier.pow(len as u32);
        (0..count)
            .map(|code| EndTable {
                arity,
                values: self.digits(code, len).into_iter().rev().collect(),
            })
            .collect()
    }

    fn digits(&self, mut t: usize, width: usize) -> Vec<u8> {
        let mut out = vec![0u8; width];
        for slot in out.iter_mut().rev() {
            *slot = (t % self.carrier) as u8;
            t /= self.carrier;
        }
        out
    }

    fn index(&self, args: &[u8]) -> usize {
        args.iter()
            .fold(0, |acc, &a| acc * self.carrier + a as usize)
    }

    pub fn eval(&self, f: &EndTable, args: &[u8]) -> u8 {
        f.values[self.index(args)]
    }

    pub fn end_compose(&self, outer: &EndTable, inners: &[EndTable]) -> Result<EndTable> {
        if inners.len() != outer.arity {
            return Err(Error::ArityMismatch {
                expected: outer.arity,
                found: inners.len(),
            });
        }
        let arity: usize = inners.iter().map(|g| g.arity).sum();
        Ok(self.from_fn(arity, |args| {
            let mut offset = 0;
            let mids: Vec<u8> = inners
                .iter()
                .map(|g| {
                    let v = self.eval(g, &args[offset..offset + g.arity]);
                    offset += g.arity;
                    v
                })
                .collect();
            self.eval(outer, &mids)
        }))
    }

    /// Right action `(f·σ)(x₁, …, xₙ) = f(x_{σ(1)}, …, x_{σ(n)})`.
    pub fn act(&self, f: &EndTable, sigma: &Permutation) -> EndTable {
        assert_eq!(f.arity, sigma.len());
        self.from_fn(f.arity, |args| {
            let permuted: Vec<u8> = (0..f.arity).map(|k| args[sigma.apply(k)]).collect();
            self.eval(f, &permuted)
        })
    }

    /// Checks `(f·σ)(g₁, …, gₙ) = f(g_{σ(1)}, …, g_{σ(n)})·σ̂` for every
    /// `σ`, where `σ̂` moves whole argument blocks.
    pub fn equivariance_check(&self, outers: &[EndTable], inners: &[EndTable]) -> LawReport {
        let mut cases = 0;
        let mut witness = None;
        for f in outers {
            let n = f.arity;
            for sigma in permutations(n) {
                for gs in tuples(inners, n) {
                    cases += 1;
                    let lhs = self.end_compose(&self.act(f, &sigma), &gs).expect("arity");
                    let reordered: Vec<EndTable> =
                        (0..n).map(|k| gs[sigma.apply(k)].clone()).collect();
                    let sizes: Vec<usize> = gs.iter().map(|g| g.arity).collect();
                    let rhs = self.act(
                        &self.end_compose(f, &reordered).expect("arity"),
                        &argument_block_permutation(&sigma, &sizes),
                    );
                    if lhs != rhs && witness.is_none() {
                        witness = Some(format!("f = {f:?}, σ = {sigma:?}, g = {gs:?}"));
                    }
                }
            }
        }
        LawReport {
            law: "equivariance".to_string(),
            instance: Operad::name(self),
            status: if witness.is_none() {
                Status::Pass
            } else {
                Status::Fail
            },
            cases,
            witness,
        }
    }
}

/// Position map `τ` with `x_{τ(t)}` feeding slot `t` of the reordered
/// composite: slot blocks follow `σ(1), …, σ(n)` while the arguments are
/// laid out in the original block order.
fn argument_block_permutation(sigma: &Permutation, sizes: &[usize]) -> Permutation {
    let mut offsets = Vec::with_capacity(sizes.len());
    let mut acc = 0;
    for &s in sizes {
        offsets.push(acc);
        acc += s;
    }
    let mut images = Vec::with_capacity(acc);
    for k in 0..sizes.len() {
        let block = sigma.apply(k);
        images.extend((0..sizes[block]).map(|t| offsets[block] + t));
    }
    Permutation::from_zero_based(images).expect("blocks tile the arguments")
}

pub(crate) fn permutations(n: usize) -> Vec<Permutation> {
    fn go(prefix: &mut Vec<usize>, used: &mut Vec<bool>, out: &mut Vec<Permutation>) {
        if prefix.len() == used.len() {
            out.push(Permutation::from_zero_based(prefix.clone()).expect("bijection"));
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                go(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    go(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

pub(crate) fn tuples<T: Clone>(items: &[T], k: usize) -> Vec<Vec<T>> {
    let mut out = vec![Vec::new()];
    for _ in 0..k {
        out = out
            .into_iter()
            .flat_map(|prefix| {
                items.iter().map(move |x| {
                    let mut next = prefix.clone();
                    next.push(x.clone());
                    next
                })
            })
            .collect();
    }
    out
}

impl Operad for FiniteEndOperad {
    type Op = EndTable;

    fn name(&self) -> String {
        format!("End(X), |X| = {}", self.carrier)
    }

    fn arity(&self, op: &EndTable) -> usize {
        op.arity
    }

    fn compose(&self, outer: &EndTable, inners: &[EndTable]) -> Result<EndTable> {
        self.end_compose(outer, inners)
    }

    fn unit(&self) -> Option<EndTable> {
        Some(self.from_fn(1, |x| x[0]))
    }

    fn equal(&self, a: &EndTable, b: &EndTable) -> bool {
        a == b
    }
}
