use std::collections::HashMap;

use super::{ModelError, ReynoldsModel};
use crate::algebra::LinComb;
use crate::words::{Atom, Letter, Word};

/// Image of a Reynolds word under the Reynolds-algebra morphism extending
/// `assignment`: letters go to their images, concatenation to the product
/// and a bracket `[u]` to `Q(image(u))`.
pub fn universal_map_word<M: ReynoldsModel>(
    model: &M,
    assignment: &HashMap<Letter, M::Element>,
    word: &Word,
) -> Result<M::Element, ModelError> {
    if !word.is_reynolds() {
        return Err(ModelError::NotReynolds(word.to_string()));
    }
    image(model, assignment, word)
}

fn image<M: ReynoldsModel>(
    model: &M,
    assignment: &HashMap<Letter, M::Element>,
    word: &Word,
) -> Result<M::Element, ModelError> {
    let mut acc: Option<M::Element> = None;
    for atom in word.atoms() {
        let factor = match atom {
            Atom::Letter(l) => assignment
                .get(l)
                .cloned()
                .ok_or_else(|| ModelError::UnassignedLetter(l.name().to_string()))?,
            Atom::Bracket(inner) => model.operator(&image(model, assignment, inner)?),
        };
        acc = Some(match acc {
            None => factor,
            Some(prev) => model.mul(&prev, &factor),
        });
    }
    Ok(acc.unwrap_or_else(|| model.one()))
}

/// Linear extension of [`universal_map_word`].
pub fn universal_map<M: ReynoldsModel>(
    model: &M,
    assignment: &HashMap<Letter, M::Element>,
    a: &LinComb<M::Scalar>,
) -> Result<M::Element, ModelError> {
    let mut out = model.zero();
    for (word, coeff) in a.terms() {
        let img = universal_map_word(model, assignment, word)?;
        out = model.add(&out, &model.scale(coeff, &img));
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::apply_p;
    use crate::models::{averaging_model, differential_model, Polynomial};
    use crate::{Combination, RationalPolynomial};

    fn assignment() -> HashMap<Letter, RationalPolynomial> {
        HashMap::from([
            (Letter::new("x").unwrap(), Polynomial::parse("x").unwrap()),
            (Letter::new("y").unwrap(), Polynomial::parse("x^2").unwrap()),
        ])
    }

    fn lc(s: &str) -> Combination {
        Combination::parse(s).unwrap()
    }

    fn poly(s: &str) -> RationalPolynomial {
        Polynomial::parse(s).unwrap()
    }

    #[test]
    fn bracket_goes_to_operator() {
        let m = averaging_model().unwrap();
        assert_eq!(
            universal_map(&m, &assignment(), &lc("[x]")).unwrap(),
            poly("1/2*x")
        );
    }

    #[test]
    fn identity_goes_to_one() {
        let m = averaging_model().unwrap();
        assert_eq!(
            universal_map(&m, &assignment(), &lc("1")).unwrap(),
            poly("1")
        );
        assert!(universal_map(&m, &assignment(), &Combination::zero())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn morphism_on_bracket_product() {
        let m = averaging_model().unwrap();
        let a = assignment();
        let w = lc("[x] [x]");
        let via_p = universal_map(&m, &a, &apply_p(&w).unwrap()).unwrap();
        let via_q = m.operator(&universal_map(&m, &a, &w).unwrap());
        assert_eq!(via_q, poly("1/12*x^2"));
        assert_eq!(via_p, via_q);
    }

    #[test]
    fn differential_images() {
        let m = differential_model().unwrap();
        let got = universal_map(&m, &assignment(), &lc("[y] - 2 * x")).unwrap();
        // Q(x^2) = x^2 - 2x + 2
        assert_eq!(got, poly("x^2 - 4*x + 2"));
    }

    #[test]
    fn errors() {
        let m = averaging_model().unwrap();
        assert_eq!(
            universal_map(&m, &assignment(), &lc("[z]")),
            Err(ModelError::UnassignedLetter("z".into()))
        );
        assert!(matches!(
            universal_map(&m, &assignment(), &lc("[[x] [y]]")),
            Err(ModelError::NotReynolds(_))
        ));
    }
}
