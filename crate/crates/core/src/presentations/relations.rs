//! Catalogs of defining relations, one `RelationPair` per instance.

use std::collections::BTreeSet;

use crate::qarith::{quantum_int, RatFunc};
use crate::weightlat::{enumerate_compositions, root, rotate, Color, Composition, Weight};

use super::{Element, Generator, Sign, Word};

/// One instance `lhs = rhs` of a relation, in the algebra of rank `n` and
/// tensor power `r`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RelationPair {
    pub id: String,
    pub lhs: Element,
    pub rhs: Element,
    pub n: usize,
    pub r: u32,
    /// The weight label of the instance, when it has one.
    pub lambda: Option<Composition>,
    /// Weights of the vectors on which the relation is tested. Every other
    /// weight space is killed by both sides for weight reasons.
    pub sources: Vec<Composition>,
}

impl RelationPair {
    /// Builds a pair tested on every weight where some word acts
    /// nontrivially, plus the weights of right-hand idempotents.
    pub fn new(
        id: impl Into<String>,
        lhs: Element,
        rhs: Element,
        n: usize,
        r: u32,
        lambda: Option<Composition>,
    ) -> Self {
        let mut sources = BTreeSet::new();
        for (w, _) in lhs.terms().chain(rhs.terms()) {
            if let Some(lam) = w.source_idempotent() {
                sources.insert(lam.clone());
            }
        }
        for lam in enumerate_compositions(n, r) {
            let acts = lhs
                .terms()
                .chain(rhs.terms())
                .any(|(w, _)| w.target_weight(lam.weight()).is_some());
            if acts {
                sources.insert(lam);
            }
        }
        Self {
            id: id.into(),
            lhs,
            rhs,
            n,
            r,
            lambda,
            sources: sources.into_iter().collect(),
        }
    }

    pub fn with_sources(mut self, sources: Vec<Composition>) -> Self {
        self.sources = sources;
        self
    }

    /// `lhs − rhs`.
    pub fn difference(&self) -> Element {
        &self.lhs - &self.rhs
    }

    pub fn effective_length(&self) -> usize {
        self.lhs.effective_length().max(self.rhs.effective_length())
    }

    pub fn source_weights(&self) -> &[Composition] {
        &self.sources
    }

    /// Every word that acts nontrivially on a source weight lands in the same
    /// target weight.
    pub fn is_weight_homogeneous(&self) -> bool {
        enumerate_compositions(self.n, self.r).iter().all(|src| {
            let targets: BTreeSet<Weight> = self
                .lhs
                .terms()
                .chain(self.rhs.terms())
                .filter_map(|(w, _)| w.target_weight(src.weight()))
                .collect();
            targets.len() <= 1
        })
    }

    /// A false variant for negative controls: adds `q·1_λ` to the right-hand
    /// side for every source weight λ. Unlike rescaling, this breaks relations
    /// whose sides vanish, since `1_λ` fixes every sampled vector of weight λ.
    pub fn corrupted(&self) -> Self {
        let q = RatFunc::from(crate::qarith::LaurentPoly::q_pow(1));
        let rhs = self.sources.iter().fold(self.rhs.clone(), |acc, lam| {
            &acc + &Element::monomial(q.clone(), Word::new(vec![Generator::Idem(lam.clone())]))
        });
        Self {
            rhs,
            ..self.clone()
        }
    }

    /// The same relation with its right-hand side multiplied by `c`.
    pub fn scale_rhs(&self, c: &RatFunc) -> Self {
        Self {
            rhs: self.rhs.scale(c),
            ..self.clone()
        }
    }
}

/// `Σ_k ±α_{i_k}` for a signed sequence.
pub fn lambda_shift(seq: &[(Sign, Color)], n: usize) -> Weight {
    seq.iter().fold(Weight::zero(n), |acc, (s, c)| {
        assert_eq!(c.rank(), n, "color of the wrong rank");
        &acc + &root(*c).scale(s.as_i64())
    })
}

/// Colors `i−1, i−2, …, i+1` (all colors but `i`, descending cyclically).
pub fn chain_down(i: Color) -> Vec<Color> {
    i.pred().descending_to(i.succ())
}

/// Colors `i+1, i+2, …, i−1` (all colors but `i`, ascending cyclically).
pub fn chain_up_minus(i: Color) -> Vec<Color> {
    i.succ().ascending_to(i.pred())
}

fn idem(lam: &Composition) -> Generator {
    Generator::Idem(lam.clone())
}

/// `1_w` if `w` is a composition, otherwise `None` (the zero idempotent).
fn idem_of_weight(w: &Weight) -> Option<Generator> {
    Composition::try_from(w.clone()).ok().map(Generator::Idem)
}

fn word(gens: impl IntoIterator<Item = Generator>) -> Word {
    gens.into_iter().collect()
}

fn el(gens: impl IntoIterator<Item = Generator>) -> Element {
    word(gens).into()
}

fn sign_tag(s: Sign) -> &'static str {
    match s {
        Sign::Plus => "+",
        Sign::Minus => "-",
    }
}

/// Every instance of the five defining relation families of the rank-`n`,
/// degree-`r` algebra over all of `Λ(n,r)`.
pub fn schur_relation_catalog(n: usize, r: u32) -> Vec<RelationPair> {
    let lambdas = enumerate_compositions(n, r);
    let colors: Vec<Color> = Color::all(n).collect();
    let mut out = Vec::new();

    for lam in &lambdas {
        for mu in &lambdas {
            let rhs = if lam == mu {
                el([idem(lam)])
            } else {
                Element::zero()
            };
            out.push(RelationPair::new(
                format!("rel1[λ={lam},μ={mu}]"),
                el([idem(lam), idem(mu)]),
                rhs,
                n,
                r,
                Some(mu.clone()),
            ));
        }
    }

    for sign in [Sign::Plus, Sign::Minus] {
        for &i in &colors {
            for lam in &lambdas {
                let e = Generator::e(sign, i);
                let target = lam.weight() + &root(i).scale(sign.as_i64());
                let rhs = match idem_of_weight(&target) {
                    Some(t) => el([t, e.clone()]),
                    None => Element::zero(),
                };
                out.push(RelationPair::new(
                    format!("rel2[{}{i},λ={lam}]", sign_tag(sign)),
                    el([e, idem(lam)]),
                    rhs,
                    n,
                    r,
                    Some(lam.clone()),
                ));
            }
        }
    }

    for &i in &colors {
        for &j in &colors {
            for lam in &lambdas {
                let lhs = &el([Generator::EPlus(i), Generator::EMinus(j), idem(lam)])
                    - &el([Generator::EMinus(j), Generator::EPlus(i), idem(lam)]);
                let rhs = if i == j {
                    let k = quantum_int(lam.at(i) - lam.at(i.succ()));
                    Element::monomial(k, word([idem(lam)]))
                } else {
                    Element::zero()
                };
                out.push(RelationPair::new(
                    format!("rel3[i={i},j={j},λ={lam}]"),
                    lhs,
                    rhs,
                    n,
                    r,
                    Some(lam.clone()),
                ));
            }
        }
    }

    let q2 = RatFunc::from(quantum_int(2));
    for sign in [Sign::Plus, Sign::Minus] {
        for &i in &colors {
            for j in [i.pred(), i.succ()] {
                for lam in &lambdas {
                    let ei = Generator::e(sign, i);
                    let ej = Generator::e(sign, j);
                    let a = el([ei.clone(), ei.clone(), ej.clone(), idem(lam)]);
                    let b = el([ei.clone(), ej.clone(), ei.clone(), idem(lam)]).scale(&q2);
                    let c = el([ej.clone(), ei.clone(), ei.clone(), idem(lam)]);
                    out.push(RelationPair::new(
                        format!("rel4[{}i={i},j={j},λ={lam}]", sign_tag(sign)),
                        &(&a - &b) + &c,
                        Element::zero(),
                        n,
                        r,
                        Some(lam.clone()),
                    ));
                }
            }
        }
    }

    for sign in [Sign::Plus, Sign::Minus] {
        for &i in &colors {
            for &j in &colors {
                if j <= i || j == i.succ() || j == i.pred() {
                    continue;
                }
                for lam in &lambdas {
                    let ei = Generator::e(sign, i);
                    let ej = Generator::e(sign, j);
                    let lhs = &el([ei.clone(), ej.clone(), idem(lam)])
                        - &el([ej, ei, idem(lam)]);
                    out.push(RelationPair::new(
                        format!("rel5[{}i={i},j={j},λ={lam}]", sign_tag(sign)),
                        lhs,
                        Element::zero(),
                        n,
                        r,
                        Some(lam.clone()),
                    ));
                }
            }
        }
    }

    out
}

/// The eleven extra relation families of the degree-`n` algebra involving
/// `E_{±δ}`, instantiated for every color.
pub fn delta_relation_catalog(n: usize) -> Vec<RelationPair> {
    let r = n as u32;
    let ones = Composition::ones(n);
    let one_n = || idem(&ones);
    let mut out = Vec::new();
    let push = |out: &mut Vec<RelationPair>, id: String, lhs: Element, rhs: Element| {
        out.push(RelationPair::new(id, lhs, rhs, n, r, None));
    };

    for (tag, d) in [("+", Generator::EDeltaPlus), ("-", Generator::EDeltaMinus)] {
        for lam in enumerate_compositions(n, r) {
            if lam == ones {
                continue;
            }
            out.push(RelationPair::new(
                format!("delta.i[{tag},λ={lam},right]"),
                el([d.clone(), idem(&lam)]),
                Element::zero(),
                n,
                r,
                Some(lam.clone()),
            ));
            // The word 1_λ E_δ has no idempotent on the right; test it on every weight.
            out.push(RelationPair::new(
                format!("delta.i[{tag},λ={lam},left]"),
                el([idem(&lam), d.clone()]),
                Element::zero(),
                n,
                r,
                Some(lam.clone()),
            )
            .with_sources(enumerate_compositions(n, r)));
        }
        push(
            &mut out,
            format!("delta.ii[{tag}]"),
            el([d.clone(), one_n()]),
            el([one_n(), d.clone()]),
        );
    }

    push(
        &mut out,
        "delta.iii[+-]".into(),
        el([Generator::EDeltaPlus, Generator::EDeltaMinus, one_n()]),
        el([one_n()]),
    );
    push(
        &mut out,
        "delta.iii[-+]".into(),
        el([Generator::EDeltaMinus, Generator::EDeltaPlus, one_n()]),
        el([one_n()]),
    );

    for i in Color::all(n) {
        let down: Vec<Generator> = chain_down(i).into_iter().map(Generator::EPlus).collect();
        let up: Vec<Generator> = chain_up_minus(i)
            .into_iter()
            .map(Generator::EMinus)
            .collect();
        let ep = Generator::EPlus(i);
        let em = Generator::EMinus(i);
        let ep2 = Generator::divided_power(Sign::Plus, i, 2);
        let em2 = Generator::divided_power(Sign::Minus, i, 2);
        let cat = |pre: Vec<Generator>, mid: &[Generator], post: Vec<Generator>| {
            el(pre.into_iter().chain(mid.iter().cloned()).chain(post))
        };

        push(
            &mut out,
            format!("delta.iv[i={i}]"),
            el([ep.clone(), Generator::EDeltaPlus, one_n()]),
            cat(vec![ep2.clone()], &down, vec![one_n()]),
        );
        push(
            &mut out,
            format!("delta.v[i={i}]"),
            el([one_n(), Generator::EDeltaPlus, ep.clone()]),
            cat(vec![one_n()], &down, vec![ep2]),
        );
        push(
            &mut out,
            format!("delta.vi[i={i}]"),
            el([em.clone(), Generator::EDeltaPlus, one_n()]),
            cat(vec![], &down, vec![one_n()]),
        );
        push(
            &mut out,
            format!("delta.vii[i={i}]"),
            el([one_n(), Generator::EDeltaPlus, em.clone()]),
            cat(vec![one_n()], &down, vec![]),
        );
        push(
            &mut out,
            format!("delta.viii[i={i}]"),
            el([em.clone(), Generator::EDeltaMinus, one_n()]),
            cat(vec![em2.clone()], &up, vec![one_n()]),
        );
        push(
            &mut out,
            format!("delta.ix[i={i}]"),
            el([one_n(), Generator::EDeltaMinus, em]),
            cat(vec![one_n()], &up, vec![em2]),
        );
        push(
            &mut out,
            format!("delta.x[i={i}]"),
            el([ep.clone(), Generator::EDeltaMinus, one_n()]),
            cat(vec![], &up, vec![one_n()]),
        );
        push(
            &mut out,
            format!("delta.xi[i={i}]"),
            el([one_n(), Generator::EDeltaMinus, ep]),
            cat(vec![one_n()], &up, vec![]),
        );
    }
    out
}

/// Instances of `RR^{-1} = R^{-1}R = 1`, `R E_{±i} R^{-1} 1_λ = E_{±(i+1)} 1_λ`
/// and `R 1_λ R^{-1} = 1_{rotate(λ)}` in degree `n`.
pub fn r_corollary_catalog(n: usize) -> Vec<RelationPair> {
    let r = n as u32;
    let lambdas = enumerate_compositions(n, r);
    let rp = Generator::RShift(Sign::Plus);
    let rm = Generator::RShift(Sign::Minus);
    let mut out = vec![
        RelationPair::new(
            "rcor.inverse[R R^-1]",
            el([rp.clone(), rm.clone()]),
            Element::identity(),
            n,
            r,
            None,
        ),
        RelationPair::new(
            "rcor.inverse[R^-1 R]",
            el([rm.clone(), rp.clone()]),
            Element::identity(),
            n,
            r,
            None,
        ),
    ];
    for sign in [Sign::Plus, Sign::Minus] {
        for i in Color::all(n) {
            for lam in &lambdas {
                out.push(RelationPair::new(
                    format!("rcor.conj[{}{i},λ={lam}]", sign_tag(sign)),
                    el([rp.clone(), Generator::e(sign, i), rm.clone(), idem(lam)]),
                    el([Generator::e(sign, i.succ()), idem(lam)]),
                    n,
                    r,
                    Some(lam.clone()),
                ));
            }
        }
    }
    for lam in &lambdas {
        let rot = Composition::try_from(rotate(lam.weight())).expect("rotation keeps entries");
        out.push(RelationPair::new(
            format!("rcor.idem[λ={lam}]"),
            el([rp.clone(), idem(lam), rm.clone()]),
            el([idem(&rot)]),
            n,
            r,
            Some(lam.clone()),
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(i: i64, n: usize) -> Color {
        Color::new(i, n)
    }

    #[test]
    fn lambda_shift_examples() {
        let n = 3;
        assert_eq!(
            lambda_shift(&[(Sign::Plus, c(1, n))], n).entries(),
            &[1, -1, 0]
        );
        assert_eq!(
            lambda_shift(&[(Sign::Plus, c(1, n)), (Sign::Minus, c(1, n))], n),
            Weight::zero(n)
        );
        assert_eq!(
            lambda_shift(
                &[
                    (Sign::Plus, c(3, n)),
                    (Sign::Plus, c(2, n)),
                    (Sign::Plus, c(1, n))
                ],
                n
            ),
            Weight::zero(n)
        );
    }

    #[test]
    fn chains() {
        let idx = |v: Vec<Color>| v.iter().map(|c| c.index()).collect::<Vec<_>>();
        assert_eq!(idx(chain_down(c(2, 3))), vec![1, 3]);
        assert_eq!(idx(chain_down(c(1, 4))), vec![4, 3, 2]);
        assert_eq!(idx(chain_down(c(3, 4))), vec![2, 1, 4]);
        assert_eq!(idx(chain_up_minus(c(2, 4))), vec![3, 4, 1]);
        assert_eq!(idx(chain_up_minus(c(4, 4))), vec![1, 2, 3]);
    }

    #[test]
    fn rel3_instance_shape() {
        let cat = schur_relation_catalog(3, 3);
        let p = cat
            .iter()
            .find(|p| p.id == "rel3[i=1,j=1,λ=(2,1,0)]")
            .unwrap();
        assert_eq!(p.lhs.to_string(), "E1 E-1 1_(2,1,0) - E-1 E1 1_(2,1,0)");
        assert_eq!(p.rhs.to_string(), "1_(2,1,0)");
        let p = cat
            .iter()
            .find(|p| p.id == "rel4[+i=1,j=2,λ=(1,1,1)]")
            .unwrap();
        assert_eq!(
            p.lhs.to_string(),
            "E1 E1 E2 1_(1,1,1) - (q + q^-1) E1 E2 E1 1_(1,1,1) + E2 E1 E1 1_(1,1,1)"
        );
        assert!(p.rhs.is_zero());
    }

    #[test]
    fn rel5_appears_only_for_nonadjacent_colors() {
        assert!(schur_relation_catalog(3, 2)
            .iter()
            .all(|p| !p.id.starts_with("rel5")));
        let cat = schur_relation_catalog(5, 1);
        let p = cat
            .iter()
            .find(|p| p.id == "rel5[+i=1,j=3,λ=(1,0,0,0,0)]")
            .unwrap();
        assert_eq!(p.lhs.to_string(), "E1 E3 1_(1,0,0,0,0) - E3 E1 1_(1,0,0,0,0)");
        assert!(p.rhs.is_zero());
    }

    #[test]
    fn delta_instances() {
        let cat = delta_relation_catalog(3);
        let get = |id: &str| cat.iter().find(|p| p.id == id).unwrap();
        let iii = get("delta.iii[+-]");
        assert_eq!(iii.lhs.to_string(), "Ed E-d 1_(1,1,1)");
        assert_eq!(iii.rhs.to_string(), "1_(1,1,1)");
        let iv = get("delta.iv[i=2]");
        assert_eq!(iv.lhs.to_string(), "E2 Ed 1_(1,1,1)");
        assert_eq!(iv.rhs.to_string(), "E2^(2) E1 E3 1_(1,1,1)");
        let i = get("delta.i[+,λ=(2,1,0),right]");
        assert!(i.rhs.is_zero());
        // 4 per non-(1^n) weight, 2 + 2 for ii and iii, 8 per color.
        assert_eq!(cat.len(), 4 * 9 + 4 + 8 * 3);
    }

    #[test]
    fn corollary_instances() {
        let cat = r_corollary_catalog(3);
        let p = cat
            .iter()
            .find(|p| p.id == "rcor.idem[λ=(2,1,0)]")
            .unwrap();
        assert_eq!(p.rhs.to_string(), "1_(0,2,1)");
        let p = cat
            .iter()
            .find(|p| p.id == "rcor.conj[+1,λ=(1,1,1)]")
            .unwrap();
        assert_eq!(p.lhs.to_string(), "R E1 R^-1 1_(1,1,1)");
        assert_eq!(p.rhs.to_string(), "E2 1_(1,1,1)");
    }

    #[test]
    fn all_catalogs_are_weight_homogeneous() {
        for n in [3, 4] {
            for r in 0..=n as u32 {
                for p in schur_relation_catalog(n, r) {
                    assert!(p.is_weight_homogeneous(), "{}", p.id);
                }
            }
            for p in delta_relation_catalog(n)
                .into_iter()
                .chain(r_corollary_catalog(n))
            {
                assert!(p.is_weight_homogeneous(), "{}", p.id);
            }
        }
    }

    #[test]
    fn signed_sequences_shift_equally() {
        // Words made of Chevalley generators shift weights by lambda_shift.
        for p in delta_relation_catalog(4) {
            let shifts: BTreeSet<Weight> = p
                .lhs
                .terms()
                .chain(p.rhs.terms())
                .filter_map(|(w, _)| w.signed_sequence())
                .map(|seq| lambda_shift(&seq, 4))
                .collect();
            assert!(shifts.len() <= 1, "{}", p.id);
        }
    }
}
