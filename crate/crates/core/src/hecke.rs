//! The type-A Hecke algebra `H_n` over `Z[z, z^-1]`, presented as the braid
//! group algebra modulo `σ_i - σ_i^-1 = z`.
//!
//! Elements carry a basis tag. The positive permutation braids `T_w` (PPB)
//! are the working basis; the negative permutation braids `U_w` (NPB) are
//! reached through [`HeckeElement::convert`].

use std::collections::BTreeMap;
use std::fmt;

use crate::braid::{BraidWord, Permutation};
use crate::error::{Error, Result};
use crate::laurent::LaurentZ;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Basis {
    /// Positive permutation braids `T_w`.
    Ppb,
    /// Negative permutation braids `U_w`.
    Npb,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HeckeElement {
    strands: usize,
    basis: Basis,
    coeffs: BTreeMap<Permutation, LaurentZ>,
}

impl HeckeElement {
    pub fn zero(strands: usize, basis: Basis) -> Self {
        Self { strands, basis, coeffs: BTreeMap::new() }
    }

    /// The unit `T_e` (equivalently `U_e`).
    pub fn one(strands: usize, basis: Basis) -> Self {
        Self::basis_element(Permutation::identity(strands), basis)
    }

    pub fn basis_element(w: Permutation, basis: Basis) -> Self {
        let strands = w.strands();
        let mut coeffs = BTreeMap::new();
        coeffs.insert(w, LaurentZ::one());
        Self { strands, basis, coeffs }
    }

    pub fn from_coeffs(
        strands: usize,
        basis: Basis,
        coeffs: impl IntoIterator<Item = (Permutation, LaurentZ)>,
    ) -> Result<Self> {
        let mut x = Self::zero(strands, basis);
        for (w, c) in coeffs {
            if w.strands() != strands {
                return Err(Error::StrandMismatch { left: strands, right: w.strands() });
            }
            x.add_to(w, &c);
        }
        Ok(x)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn basis(&self) -> Basis {
        self.basis
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn coeff(&self, w: &Permutation) -> LaurentZ {
        self.coeffs.get(w).cloned().unwrap_or_default()
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Permutation, &LaurentZ)> {
        self.coeffs.iter()
    }

    pub fn support_len(&self) -> usize {
        self.coeffs.len()
    }

    fn add_to(&mut self, w: Permutation, c: &LaurentZ) {
        if c.is_zero() {
            return;
        }
        let mut acc = self.coeffs.remove(&w).unwrap_or_default();
        acc += c;
        if !acc.is_zero() {
            self.coeffs.insert(w, acc);
        }
    }

    pub fn add(&self, other: &HeckeElement) -> Result<HeckeElement> {
        self.check_compatible(other)?;
        let mut out = self.clone();
        for (w, c) in &other.coeffs {
            out.add_to(w.clone(), c);
        }
        Ok(out)
    }

    pub fn scale(&self, c: &LaurentZ) -> HeckeElement {
        let mut out = HeckeElement::zero(self.strands, self.basis);
        for (w, a) in &self.coeffs {
            out.add_to(w.clone(), &(a * c));
        }
        out
    }

    fn check_compatible(&self, other: &HeckeElement) -> Result<()> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        if self.basis != other.basis {
            return Err(Error::Format("hecke elements are in different bases".into()));
        }
        Ok(())
    }

    fn require_ppb(&self) -> Result<()> {
        if self.basis != Basis::Ppb {
            return Err(Error::Format("operation requires the PPB basis".into()));
        }
        Ok(())
    }

    /// Right multiplication by `σ_i` (`positive`) or `σ_i^-1`, in the PPB
    /// basis.
    pub fn mul_generator(&self, i: usize, positive: bool) -> Result<HeckeElement> {
        self.require_ppb()?;
        if i == 0 || i >= self.strands {
            return Err(Error::GeneratorOutOfRange {
                index: if positive { i as i32 } else { -(i as i32) },
                strands: self.strands,
            });
        }
        let z = LaurentZ::z();
        let mut out = HeckeElement::zero(self.strands, Basis::Ppb);
        for (w, c) in &self.coeffs {
            let ws = w.times_simple(i);
            if w.ascends_at(i) {
                // T_w σ_i = T_{w s_i}
                out.add_to(ws, c);
                if !positive {
                    // σ_i^-1 = σ_i - z
                    out.add_to(w.clone(), &-&(c * &z));
                }
            } else {
                // T_w σ_i = T_{w s_i} + z T_w
                out.add_to(ws, c);
                if positive {
                    out.add_to(w.clone(), &(c * &z));
                }
            }
        }
        Ok(out)
    }

    /// Image of a braid word in `H_n`, in the PPB basis.
    pub fn expand_word(word: &BraidWord) -> HeckeElement {
        let mut x = HeckeElement::one(word.strands(), Basis::Ppb);
        for &g in word.letters() {
            x = x
                .mul_generator(g.unsigned_abs() as usize, g > 0)
                .expect("braid word letters are in range");
        }
        x
    }

    /// Bilinear product of two PPB elements.
    pub fn multiply(&self, other: &HeckeElement) -> Result<HeckeElement> {
        self.require_ppb()?;
        other.require_ppb()?;
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        let mut out = HeckeElement::zero(self.strands, Basis::Ppb);
        for (w, c) in &other.coeffs {
            let mut x = self.clone();
            for &g in w.reduced_word().letters() {
                x = x.mul_generator(g as usize, true)?;
            }
            for (u, a) in &x.coeffs {
                out.add_to(u.clone(), &(a * c));
            }
        }
        Ok(out)
    }

    /// `U_w` written in the PPB basis.
    pub fn npb_in_ppb(w: &Permutation) -> HeckeElement {
        HeckeElement::expand_word(&w.reduced_word().negated())
    }

    /// Re-expresses the same algebra element in `target`.
    ///
    /// PPB to NPB is a triangular substitution: `U_w = T_w + (shorter T
    /// terms)`, so peeling off the longest remaining `T_w` terms one at a time
    /// terminates.
    pub fn convert(&self, target: Basis) -> HeckeElement {
        match (self.basis, target) {
            (a, b) if a == b => self.clone(),
            (Basis::Npb, Basis::Ppb) => {
                let mut out = HeckeElement::zero(self.strands, Basis::Ppb);
                for (w, c) in &self.coeffs {
                    for (u, a) in &HeckeElement::npb_in_ppb(w).coeffs {
                        out.add_to(u.clone(), &(a * c));
                    }
                }
                out
            }
            _ => {
                let mut rest = self.clone();
                let mut out = HeckeElement::zero(self.strands, Basis::Npb);
                while let Some(w) = rest
                    .coeffs
                    .keys()
                    .max_by(|a, b| a.coxeter_length().cmp(&b.coxeter_length()).then(b.cmp(a)))
                    .cloned()
                {
                    let c = rest.coeff(&w);
                    let sub = HeckeElement::npb_in_ppb(&w).scale(&c);
                    for (u, a) in &sub.coeffs {
                        rest.add_to(u.clone(), &-a);
                    }
                    out.add_to(w, &c);
                }
                out
            }
        }
    }

    /// Coefficient of the longest element, in whichever basis `self` is in.
    pub fn top_coeff(&self) -> LaurentZ {
        self.coeff(&Permutation::longest(self.strands))
    }

    /// One line per basis element, `w : coefficient`, ordered by Coxeter
    /// length then one-line notation.
    pub fn render(&self) -> String {
        let mut keys: Vec<&Permutation> = self.coeffs.keys().collect();
        keys.sort_by(|a, b| a.coxeter_length().cmp(&b.coxeter_length()).then(a.cmp(b)));
        let mut out = String::new();
        for w in keys {
            out.push_str(&format!("{w} : {}\n", self.coeffs[w]));
        }
        out
    }
}

impl fmt::Display for HeckeElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn word(n: usize, letters: &[i32]) -> BraidWord {
        BraidWord::new(n, letters.to_vec()).unwrap()
    }

    fn s1() -> Permutation {
        Permutation::from_images(&[2, 1]).unwrap()
    }

    fn e2() -> Permutation {
        Permutation::identity(2)
    }

    fn elt(basis: Basis, terms: Vec<(Permutation, LaurentZ)>) -> HeckeElement {
        HeckeElement::from_coeffs(terms[0].0.strands(), basis, terms).unwrap()
    }

    #[test]
    fn mul_generator_examples() {
        let te = HeckeElement::one(2, Basis::Ppb);
        assert_eq!(te.mul_generator(1, true).unwrap(), HeckeElement::basis_element(s1(), Basis::Ppb));
        let ts = HeckeElement::basis_element(s1(), Basis::Ppb);
        assert_eq!(
            ts.mul_generator(1, true).unwrap(),
            elt(Basis::Ppb, vec![(e2(), LaurentZ::one()), (s1(), LaurentZ::z())])
        );
        assert_eq!(ts.mul_generator(1, false).unwrap(), te);
        assert!(matches!(te.mul_generator(2, true), Err(Error::GeneratorOutOfRange { .. })));
    }

    #[test]
    fn expand_word_examples() {
        assert_eq!(HeckeElement::expand_word(&word(3, &[])), HeckeElement::one(3, Basis::Ppb));
        assert_eq!(
            HeckeElement::expand_word(&word(2, &[-1])),
            elt(Basis::Ppb, vec![(s1(), LaurentZ::one()), (e2(), -&LaurentZ::z())])
        );
        assert_eq!(
            HeckeElement::expand_word(&word(2, &[1, 1])),
            elt(Basis::Ppb, vec![(e2(), LaurentZ::one()), (s1(), LaurentZ::z())])
        );
    }

    #[test]
    fn convert_examples() {
        assert_eq!(
            HeckeElement::one(2, Basis::Ppb).convert(Basis::Npb),
            HeckeElement::one(2, Basis::Npb)
        );
        assert_eq!(
            HeckeElement::basis_element(s1(), Basis::Ppb).convert(Basis::Npb),
            elt(Basis::Npb, vec![(s1(), LaurentZ::one()), (e2(), LaurentZ::z())])
        );
        assert_eq!(
            HeckeElement::expand_word(&word(2, &[1, 1])).convert(Basis::Npb),
            elt(
                Basis::Npb,
                vec![(e2(), LaurentZ::from_terms([(0, 1), (2, 1)])), (s1(), LaurentZ::z())]
            )
        );
    }

    #[test]
    fn top_coeff_examples() {
        assert!(HeckeElement::one(2, Basis::Ppb).top_coeff().is_zero());
        assert_eq!(HeckeElement::expand_word(&word(2, &[1, 1])).top_coeff(), LaurentZ::z());
        let ht = crate::braid::half_twist_word(3);
        assert_eq!(HeckeElement::expand_word(&ht).top_coeff(), LaurentZ::one());
    }

    #[test]
    fn multiply_examples() {
        let x = HeckeElement::expand_word(&word(3, &[1, -2, 2, 2]));
        assert_eq!(HeckeElement::one(3, Basis::Ppb).multiply(&x).unwrap(), x);
        let a = HeckeElement::expand_word(&word(2, &[1]));
        let b = HeckeElement::expand_word(&word(2, &[-1]));
        assert_eq!(a.multiply(&b).unwrap(), HeckeElement::one(2, Basis::Ppb));
        assert_eq!(a.multiply(&a).unwrap(), HeckeElement::expand_word(&word(2, &[1, 1])));
        let c = HeckeElement::one(3, Basis::Ppb);
        assert!(matches!(a.multiply(&c), Err(Error::StrandMismatch { .. })));
    }

    #[test]
    fn render_order() {
        let x = HeckeElement::expand_word(&word(2, &[1, 1]));
        assert_eq!(x.render(), "1,2 : 1\n2,1 : z\n");
    }

    #[test]
    fn half_twist_sends_npb_to_ppb() {
        for n in 1..=4 {
            let ht = HeckeElement::expand_word(&crate::braid::half_twist_word(n));
            for w in Permutation::all(n) {
                let u = HeckeElement::npb_in_ppb(&w);
                for prod in [ht.multiply(&u).unwrap(), u.multiply(&ht).unwrap()] {
                    assert_eq!(prod.support_len(), 1, "n={n} w={w}");
                    let (_, c) = prod.iter().next().unwrap();
                    assert!(c.is_one());
                }
            }
        }
    }

    fn arb_word(n: usize, max_len: usize) -> impl Strategy<Value = BraidWord> {
        proptest::collection::vec((1..n as i32, any::<bool>()), 0..=max_len).prop_map(move |ls| {
            let letters = ls.into_iter().map(|(g, s)| if s { g } else { -g }).collect();
            BraidWord::new(n, letters).unwrap()
        })
    }

    fn arb_element(n: usize) -> impl Strategy<Value = HeckeElement> {
        proptest::collection::vec(
            (arb_word(n, 6), proptest::collection::vec((-3i64..=3, -2i64..=2), 1..3)),
            1..4,
        )
        .prop_map(move |parts| {
            let mut x = HeckeElement::zero(n, Basis::Ppb);
            for (w, cs) in parts {
                let c = LaurentZ::from_terms(cs);
                x = x.add(&HeckeElement::expand_word(&w).scale(&c)).unwrap();
            }
            x
        })
    }

    proptest! {
        #[test]
        fn expansion_is_a_homomorphism(
            n in 2usize..=4,
            seed in any::<u64>(),
        ) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
            let rand_word = |rng: &mut rand_chacha::ChaCha8Rng| {
                let len = rng.gen_range(0..=8);
                let letters = (0..len)
                    .map(|_| {
                        let g = rng.gen_range(1..n as i32);
                        if rng.gen_bool(0.5) { g } else { -g }
                    })
                    .collect();
                BraidWord::new(n, letters).unwrap()
            };
            let u = rand_word(&mut rng);
            let v = rand_word(&mut rng);
            let lhs = HeckeElement::expand_word(&u.concat(&v).unwrap());
            let rhs = HeckeElement::expand_word(&u)
                .multiply(&HeckeElement::expand_word(&v))
                .unwrap();
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn basis_round_trip(x in (2usize..=4).prop_flat_map(arb_element)) {
            let back = x.convert(Basis::Npb).convert(Basis::Ppb);
            prop_assert_eq!(back, x);
        }

        #[test]
        fn top_coefficients_agree(x in (2usize..=4).prop_flat_map(arb_element)) {
            prop_assert_eq!(x.top_coeff(), x.convert(Basis::Npb).top_coeff());
        }

        #[test]
        fn full_twist_is_central(x in (2usize..=4).prop_flat_map(arb_element)) {
            let ft = HeckeElement::expand_word(&crate::braid::full_twist_word(x.strands()));
            prop_assert_eq!(ft.multiply(&x).unwrap(), x.multiply(&ft).unwrap());
        }
    }
}
