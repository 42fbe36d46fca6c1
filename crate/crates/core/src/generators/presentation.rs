use crate::complex::SimplicialComplex;
use crate::error::{Error, Result};

/// A word in the generators: letter `j` is the j-th generator (1-based), `-j` its inverse.
pub type Word = Vec<i32>;

/// Parses a word written with letters `a..z` for generators and `A..Z` for inverses.
pub fn parse_word(text: &str) -> Result<Word> {
    text.chars()
        .filter(|c| !c.is_whitespace())
        .map(|c| match c {
            'a'..='z' => Ok(c as i32 - 'a' as i32 + 1),
            'A'..='Z' => Ok(-(c as i32 - 'A' as i32 + 1)),
            _ => Err(Error::Format(format!("unexpected letter {c:?} in relator {text:?}"))),
        })
        .collect()
}

/// A simplicial 2-complex homotopy equivalent to the presentation complex of
/// `⟨x_1..x_g | relators⟩`.
///
/// Vertex 0 is the base point and generator `j` is the triangle loop
/// `0 → 2j-1 → 2j → 0`. A relator of length `L` traces a closed walk of `3L`
/// edges; its disk is an annulus between that walk and a fresh ring of `3L`
/// vertices, capped by a cone on the ring. Fresh ring vertices keep every disk
/// simplex distinct even when the walk repeats edges.
pub fn presentation_complex(generators: usize, relators: &[Word]) -> Result<SimplicialComplex> {
    let mut tops: Vec<Vec<usize>> = Vec::new();
    for j in 1..=generators {
        let (p, q) = (2 * j - 1, 2 * j);
        tops.extend([vec![0, p], vec![p, q], vec![q, 0]]);
    }
    let mut next = 2 * generators + 1;
    for (r, word) in relators.iter().enumerate() {
        if word.is_empty() {
            return Err(Error::EmptyRelator(r));
        }
        let mut walk = vec![0usize];
        for &letter in word {
            let j = letter.unsigned_abs() as usize;
            if j == 0 || j > generators {
                return Err(Error::BadLetter { letter, generators });
            }
            let (p, q) = (2 * j - 1, 2 * j);
            if letter > 0 {
                walk.extend([p, q, 0]);
            } else {
                walk.extend([q, p, 0]);
            }
        }
        let len = walk.len() - 1;
        let ring: Vec<usize> = (next..next + len).collect();
        let cone = next + len;
        next = cone + 1;
        for t in 0..len {
            let u = ring[t];
            let u_next = ring[(t + 1) % len];
            tops.push(vec![walk[t], walk[t + 1], u]);
            tops.push(vec![walk[t + 1], u, u_next]);
            tops.push(vec![cone, u, u_next]);
        }
    }
    SimplicialComplex::build(&tops, next)
}
