//! The embedding of the degree-`n` algebra of rank `n` into rank `n+1`.

use crate::weightlat::{Color, Composition};

use super::relations::RelationPair;
use super::rexp::r_expansion;
use super::{inverse_factorial, Element, Generator, PresentationError, Sign, Word};

fn lift(c: Color, n: usize) -> Color {
    Color::new(c.index() as i64, n + 1)
}

fn pad(lam: &Composition) -> Composition {
    lam.extend(0)
}

fn word(gens: Vec<Generator>) -> Element {
    Word::new(gens).into()
}

/// `ι(E_{±n})` as a word in rank `n+1`.
fn last_color_image(sign: Sign, n: usize) -> Vec<Generator> {
    let cn = Color::new(n as i64, n + 1);
    let cn1 = Color::new(n as i64 + 1, n + 1);
    match sign {
        Sign::Plus => vec![Generator::EPlus(cn), Generator::EPlus(cn1)],
        Sign::Minus => vec![Generator::EMinus(cn1), Generator::EMinus(cn)],
    }
}

fn generator_image(
    g: &Generator,
    n: usize,
    rewrite_r: bool,
) -> Result<Element, PresentationError> {
    let ones_pad = || Generator::Idem(pad(&Composition::ones(n)));
    Ok(match g {
        Generator::Idem(lam) => word(vec![Generator::Idem(pad(lam))]),
        Generator::EPlus(c) | Generator::EMinus(c) if c.index() < n => {
            let (s, _, _) = g.chevalley().expect("chevalley");
            word(vec![Generator::e(s, lift(*c, n))])
        }
        Generator::EPlus(_) => word(last_color_image(Sign::Plus, n)),
        Generator::EMinus(_) => word(last_color_image(Sign::Minus, n)),
        Generator::DividedPower {
            sign,
            color,
            exponent,
        } => {
            if color.index() < n {
                word(vec![Generator::divided_power(
                    *sign,
                    lift(*color, n),
                    *exponent,
                )])
            } else {
                let mut gens = Vec::new();
                for _ in 0..*exponent {
                    gens.extend(last_color_image(*sign, n));
                }
                Element::monomial(inverse_factorial(*exponent), Word::new(gens))
            }
        }
        Generator::EDeltaPlus => {
            let mut gens: Vec<Generator> = (1..=n as i64)
                .rev()
                .map(|i| Generator::EPlus(Color::new(i, n + 1)))
                .collect();
            gens.push(Generator::EPlus(Color::new(n as i64 + 1, n + 1)));
            gens.push(ones_pad());
            word(gens)
        }
        Generator::EDeltaMinus => {
            let mut gens = vec![Generator::EMinus(Color::new(n as i64 + 1, n + 1))];
            gens.extend((1..=n as i64).map(|i| Generator::EMinus(Color::new(i, n + 1))));
            gens.push(ones_pad());
            word(gens)
        }
        Generator::RShift(sign) => {
            if !rewrite_r {
                return Err(PresentationError::UnmappedGenerator(g.to_string()));
            }
            r_expansion(n, *sign).try_map_words(|w| iota_image(w, n, false))?
        }
    })
}

/// Image of a word of the rank-`n` algebra under the embedding into rank
/// `n+1`. `R^{±1}` is first rewritten through its divided-power expansion
/// when `rewrite_r` is set; otherwise it is rejected.
///
/// The result is an element rather than a word: `E_n^{(a)}` maps to
/// `(E_n E_{n+1})^a / [a]!`.
pub fn iota_image(w: &Word, n: usize, rewrite_r: bool) -> Result<Element, PresentationError> {
    w.factors()
        .iter()
        .try_fold(Element::identity(), |acc, g| {
            Ok(&acc * &generator_image(g, n, rewrite_r)?)
        })
}

impl RelationPair {
    /// The relation mapped into rank `n+1`, tested on weights `(μ,0)`.
    pub fn iota(&self, rewrite_r: bool) -> Result<RelationPair, PresentationError> {
        let n = self.n;
        let map = |e: &Element| e.try_map_words(|w| iota_image(w, n, rewrite_r));
        let sources = self.source_weights().iter().map(pad).collect();
        Ok(RelationPair {
            id: format!("iota:{}", self.id),
            lhs: map(&self.lhs)?,
            rhs: map(&self.rhs)?,
            n: n + 1,
            r: self.r,
            lambda: self.lambda.as_ref().map(pad),
            sources,
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qarith::RatFunc;

    fn comp(v: &[i64]) -> Composition {
        Composition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn generator_images() {
        let n = 3;
        let ones = comp(&[1, 1, 1]);
        let w = Word::new(vec![Generator::Idem(ones.clone())]);
        assert_eq!(iota_image(&w, n, false).unwrap().to_string(), "1_(1,1,1,0)");
        let w = Word::new(vec![
            Generator::EPlus(Color::new(3, 3)),
            Generator::Idem(ones.clone()),
        ]);
        assert_eq!(
            iota_image(&w, n, false).unwrap().to_string(),
            "E3 E4 1_(1,1,1,0)"
        );
        let w = Word::new(vec![Generator::EDeltaPlus, Generator::Idem(ones.clone())]);
        assert_eq!(
            iota_image(&w, n, false).unwrap().to_string(),
            "E3 E2 E1 E4 1_(1,1,1,0) 1_(1,1,1,0)"
        );
        let w = Word::new(vec![Generator::EDeltaMinus]);
        assert_eq!(
            iota_image(&w, n, false).unwrap().to_string(),
            "E-4 E-1 E-2 E-3 1_(1,1,1,0)"
        );
        let w = Word::new(vec![Generator::EMinus(Color::new(3, 3))]);
        assert_eq!(iota_image(&w, n, false).unwrap().to_string(), "E-4 E-3");
        let w = Word::new(vec![Generator::EMinus(Color::new(2, 3))]);
        assert_eq!(iota_image(&w, n, false).unwrap().to_string(), "E-2");
    }

    #[test]
    fn divided_power_of_last_color() {
        let w = Word::new(vec![Generator::divided_power(
            Sign::Plus,
            Color::new(3, 3),
            2,
        )]);
        let img = iota_image(&w, 3, false).unwrap();
        assert_eq!(img.num_terms(), 1);
        let (word, c) = img.terms().next().unwrap();
        assert_eq!(word.to_string(), "E3 E4 E3 E4");
        assert_eq!(c, &inverse_factorial(2));
        let w = Word::new(vec![Generator::divided_power(
            Sign::Plus,
            Color::new(2, 3),
            2,
        )]);
        assert_eq!(iota_image(&w, 3, false).unwrap().to_string(), "E2^(2)");
    }

    #[test]
    fn r_needs_rewriting() {
        let w = Word::new(vec![Generator::RShift(Sign::Plus)]);
        assert!(matches!(
            iota_image(&w, 3, false),
            Err(PresentationError::UnmappedGenerator(_))
        ));
        let img = iota_image(&w, 3, true).unwrap();
        assert_eq!(img.num_terms(), 10);
        assert!(img.terms().all(|(_, c)| c != &RatFunc::zero()));
    }

    #[test]
    fn image_is_multiplicative() {
        let n = 3;
        let a = Word::new(vec![
            Generator::EPlus(Color::new(3, 3)),
            Generator::EMinus(Color::new(1, 3)),
        ]);
        let b = Word::new(vec![
            Generator::divided_power(Sign::Minus, Color::new(3, 3), 2),
            Generator::EDeltaPlus,
        ]);
        let whole = iota_image(&a.then(&b), n, false).unwrap();
        let parts = &iota_image(&a, n, false).unwrap() * &iota_image(&b, n, false).unwrap();
        assert_eq!(whole, parts);
    }

    #[test]
    fn relation_image_pads_sources() {
        let cat = super::super::schur_relation_catalog(3, 3);
        let p = cat.iter().find(|p| p.id == "rel2[+3,λ=(1,1,1)]").unwrap();
        let img = p.iota(false).unwrap();
        assert_eq!(img.n, 4);
        assert_eq!(img.sources, vec![comp(&[1, 1, 1, 0])]);
        assert_eq!(img.lhs.to_string(), "E3 E4 1_(1,1,1,0)");
        assert_eq!(img.rhs.to_string(), "1_(0,1,2,0) E3 E4");
        assert!(img.is_weight_homogeneous());
    }
}
