use crate::bitset::PointSet;
use crate::error::{Error, Result};
use crate::setsys::SetFamily;

/// Largest product ground set `free_product` will materialize.
pub const MAX_PRODUCT_GROUND: usize = 1 << 24;

/// The free product of finite set families, realized on the product of
/// their ground sets.
///
/// A point is encoded in mixed radix with factor 0 as the least significant
/// digit: `x_0 + N_0·(x_1 + N_1·(x_2 + …))`. Member `j` is the cylinder
/// `{x : x_i ∈ a}` for the factor member listed in `origin(j)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ProductFamily {
    radices: Vec<usize>,
    origin: Vec<(usize, usize)>,
    family: SetFamily,
}

impl ProductFamily {
    pub fn ground(&self) -> usize {
        self.family.ground()
    }

    pub fn radices(&self) -> &[usize] {
        &self.radices
    }

    /// The cylinder family.
    pub fn family(&self) -> &SetFamily {
        &self.family
    }

    pub fn into_family(self) -> SetFamily {
        self.family
    }

    /// `(factor, member)` behind cylinder `j`.
    pub fn origin(&self, j: usize) -> (usize, usize) {
        self.origin[j]
    }

    pub fn coordinates(&self, point: usize) -> Vec<usize> {
        decode(&self.radices, point)
    }

    pub fn encode(&self, coords: &[usize]) -> usize {
        encode(&self.radices, coords)
    }
}

pub(crate) fn decode(radices: &[usize], mut point: usize) -> Vec<usize> {
    radices
        .iter()
        .map(|&r| {
            let c = point % r;
            point /= r;
            c
        })
        .collect()
}

pub(crate) fn encode(radices: &[usize], coords: &[usize]) -> usize {
    radices
        .iter()
        .zip(coords)
        .rev()
        .fold(0, |acc, (&r, &c)| acc * r + c)
}

pub(crate) fn product_size(radices: &[usize]) -> Result<usize> {
    let total = radices
        .iter()
        .try_fold(1u128, |acc, &r| acc.checked_mul(r as u128))
        .unwrap_or(u128::MAX);
    if total > MAX_PRODUCT_GROUND as u128 {
        return Err(Error::GroundTooLarge(total));
    }
    Ok(total as usize)
}

/// Cylinder family over the product of the factors' ground sets.
///
/// ```
/// use freedim::algebras::free_product;
/// use freedim::setsys::{atoms, SetFamily};
/// let f1 = SetFamily::from_lists(2, &[vec![0]]).unwrap();
/// let f2 = SetFamily::from_lists(3, &[vec![0, 1]]).unwrap();
/// let p = free_product(&[f1, f2]).unwrap();
/// assert_eq!(p.ground(), 6);
/// assert_eq!(atoms(p.family()).len(), 4);
/// ```
pub fn free_product(factors: &[SetFamily]) -> Result<ProductFamily> {
    if let Some(i) = factors.iter().position(|f| f.ground() == 0) {
        return Err(Error::EmptyFactor(i));
    }
    let radices: Vec<usize> = factors.iter().map(SetFamily::ground).collect();
    let ground = product_size(&radices)?;
    let coords: Vec<Vec<usize>> = (0..ground).map(|p| decode(&radices, p)).collect();
    let mut origin = Vec::new();
    let mut members = Vec::new();
    for (i, factor) in factors.iter().enumerate() {
        for (k, a) in factor.members().iter().enumerate() {
            origin.push((i, k));
            members.push(PointSet::from_points(
                ground,
                (0..ground).filter(|&p| a.contains(coords[p][i])),
            ));
        }
    }
    Ok(ProductFamily {
        radices,
        origin,
        family: SetFamily::new(ground, members)?,
    })
}
