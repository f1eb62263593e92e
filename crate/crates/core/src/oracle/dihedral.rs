use crate::cell::Cell;
use crate::square::Square;

/// The eight images of `s` under rotations and reflections, identity first.
pub fn dihedral_images<T: Cell>(s: &Square<T>) -> Vec<Square<T>> {
    let mut out = Vec::with_capacity(8);
    let mut cur = s.clone();
    for _ in 0..4 {
        let mirrored = cur.reflect();
        out.push(cur.clone());
        out.push(mirrored);
        cur = cur.rotate90();
    }
    out
}

/// The image with the lexicographically smallest row-major cell sequence.
pub fn canonical_form<T: Cell>(s: &Square<T>) -> Square<T> {
    dihedral_images(s)
        .into_iter()
        .min_by(|a, b| a.cells().cmp(b.cells()))
        .expect("eight images")
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn sample() -> Square<i64> {
        Square::from_cells(3, (1..=9).map(|v| (v * 7) % 10).collect()).unwrap()
    }

    #[test]
    fn images_include_identity_and_are_closed() {
        let s = sample();
        let images = dihedral_images(&s);
        assert_eq!(images.len(), 8);
        assert_eq!(images[0], s);
        let set: HashSet<_> = images.iter().cloned().collect();
        for img in &images {
            let again: HashSet<_> = dihedral_images(img).into_iter().collect();
            assert_eq!(again, set);
        }
    }

    #[test]
    fn canonical_is_orbit_invariant_and_idempotent() {
        let s = sample();
        let c = canonical_form(&s);
        assert_eq!(canonical_form(&s.rotate90()), c);
        assert_eq!(canonical_form(&s.reflect()), c);
        assert_eq!(canonical_form(&c), c);
    }
}
