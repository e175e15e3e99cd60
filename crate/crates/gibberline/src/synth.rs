//! Synthetic fixture corpus.
//!
//! Real paper corpora are not redistributable here, so tests and demos use
//! generated stand-ins. "Generated-like" documents splice keywords drawn
//! uniformly from a large pool into fixed sentence templates, so no keyword
//! is favored anywhere. "Human-like" documents reuse a small per-document
//! topic pool across title, abstract, body and references, the
//! self-reference structure the features are built to detect.
//!
//! The shipped fixture corpus under `fixtures/corpus/` was produced by
//! [`write_fixture_corpus`] with [`FIXTURE_SEED`].

use std::io;
use std::path::Path;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// Seed used for the shipped fixture corpus.
pub const FIXTURE_SEED: u64 = 0x9e3779b97f4a7c15;

/// Technical-looking keyword pool. None of these are closed-class words,
/// so they all survive the part-of-speech filter.
const KEYWORDS: &[&str] = &[
    "lattice", "spectrum", "partition", "manifold", "gradient", "entropy", "kernel", "tensor",
    "operator", "topology", "cluster", "embedding", "quantizer", "automaton", "heuristic",
    "polytope", "matroid", "isomorphism", "homology", "fibration", "semigroup", "monoid",
    "functor", "sheaf", "cohomology", "geodesic", "curvature", "soliton", "attractor",
    "bifurcation", "resonance", "dissipation", "viscosity", "turbulence", "plasma", "photon",
    "phonon", "exciton", "polaron", "magnon", "qubit", "qudit", "decoherence", "entanglement",
    "teleportation", "annealing", "tunneling", "superposition", "interferometer", "waveguide",
    "resonator", "oscillator", "amplifier", "modulator", "detector", "calorimeter", "spectrometer",
    "cryostat", "substrate", "nanotube", "graphene", "perovskite", "ferromagnet", "superfluid",
    "condensate", "quasiparticle", "hamiltonian", "lagrangian", "eigenvalue", "eigenvector",
    "determinant", "permanent", "resolvent", "semidefinite", "submodular", "supermodular",
    "convexity", "duality", "relaxation", "rounding", "sparsification", "preconditioner",
    "factorization", "decomposition", "projection", "contraction", "dilation", "isometry",
    "martingale", "percolation", "diffusion", "recurrence", "ergodicity", "mixing", "coupling",
    "renormalization", "scaling", "universality", "criticality", "hysteresis", "anisotropy",
    "permeability", "impedance", "admittance", "capacitance", "inductance", "conductance",
    "scattering", "absorption", "emission", "fluorescence", "luminescence", "polarization",
    "birefringence", "dichroism", "chirality", "helicity", "parity", "symmetry", "invariant",
    "covariant", "adjoint", "unitary", "hermitian", "stochastic", "deterministic", "asymptotic",
    "perturbative", "variational", "adiabatic", "ballistic", "diffusive", "mesoscopic",
    "holographic", "topological", "geometric", "algebraic", "combinatorial", "probabilistic",
    "archive", "benchmark", "corpus", "dataset", "ontology", "taxonomy", "grammar", "parser",
    "compiler", "interpreter", "scheduler", "allocator", "cache", "pipeline", "throughput",
    "latency", "bandwidth", "protocol", "consensus", "ledger", "replica", "quorum", "gossip",
    "checkpoint", "snapshot", "rollback", "journal", "shard", "bloom", "trie", "treap",
    "splay", "cuckoo", "skiplist", "bitmap", "wavelet", "cepstrum", "chromagram", "formant",
    "prosody", "phoneme", "morpheme", "lexeme", "synset", "hypernym", "meronym", "pragmatics",
];

/// Surnames for fabricated reference entries.
const SURNAMES: &[&str] = &[
    "ashford", "bellweather", "castellan", "dumont", "eriksen", "fontaine", "grimaldi",
    "hartwell", "ivanova", "jennings", "kowalski", "lindqvist", "moreau", "nakagawa",
    "ostrowski", "pellegrini", "quintero", "rosenthal", "sorensen", "takahashi", "underwood",
    "vasquez", "whitfield", "yamamoto", "zielinski",
];

// Sentence skeletons built entirely from closed-class words, so only the
// spliced keywords survive filtering.
const TEMPLATES: &[&str] = &[
    "The {} of the {} is the {} of this {}.",
    "We can see that the {} follows from the {} and the {}.",
    "It is the {} that makes the {} of the {} so {}.",
    "Here the {} is taken over the {} with the {}.",
    "This {} can be seen as a {} over the {}.",
    "The {} and the {} are both in the {}.",
    "For each {} there is a {} with the same {}.",
    "Such a {} would be a {} for any {}.",
];

fn fill_template<'a>(template: &str, mut words: impl Iterator<Item = &'a str>) -> String {
    let mut out = String::with_capacity(template.len() + 32);
    for (i, part) in template.split("{}").enumerate() {
        if i > 0 {
            out.push_str(words.next().expect("one word per slot"));
        }
        out.push_str(part);
    }
    out
}

fn sentence(rng: &mut impl Rng, pool: &[&str]) -> String {
    let template = TEMPLATES[rng.gen_range(0..TEMPLATES.len())];
    let slots = template.matches("{}").count();
    let words: Vec<&str> = (0..slots)
        .map(|_| pool[rng.gen_range(0..pool.len())])
        .collect();
    fill_template(template, words.into_iter())
}

fn reference_entry(rng: &mut impl Rng, pool: &[&str]) -> String {
    let a = SURNAMES[rng.gen_range(0..SURNAMES.len())];
    let b = SURNAMES[rng.gen_range(0..SURNAMES.len())];
    let w1 = pool[rng.gen_range(0..pool.len())];
    let w2 = pool[rng.gen_range(0..pool.len())];
    let year = rng.gen_range(1985..2024);
    format!("{a} and {b}. On the {w1} of the {w2}. {year}.")
}

fn assemble(title: &str, abstract_s: &[String], body: &[String], refs: &[String]) -> String {
    format!(
        "{title}\n\nAbstract\n{}\n\nIntroduction\n{}\n\nReferences\n{}\n",
        abstract_s.join(" "),
        body.join(" "),
        refs.join("\n")
    )
}

/// A spliced-keyword document: every slot draws uniformly from the full
/// keyword pool, so no keyword is favored and sections share little.
pub fn generated_doc(rng: &mut impl Rng) -> String {
    let title = sentence(rng, KEYWORDS);
    let abstract_s: Vec<String> = (0..5).map(|_| sentence(rng, KEYWORDS)).collect();
    let body: Vec<String> = (0..45).map(|_| sentence(rng, KEYWORDS)).collect();
    let refs: Vec<String> = (0..8).map(|_| reference_entry(rng, KEYWORDS)).collect();
    assemble(&title, &abstract_s, &body, &refs)
}

/// A topic-reuse document: a small per-document keyword pool recurs across
/// the title, abstract, body and references.
pub fn human_doc(rng: &mut impl Rng) -> String {
    let topic: Vec<&str> = KEYWORDS
        .choose_multiple(rng, 10)
        .copied()
        .collect();
    let title = sentence(rng, &topic);
    let abstract_s: Vec<String> = (0..5).map(|_| sentence(rng, &topic)).collect();
    let body: Vec<String> = (0..45)
        .map(|_| {
            // An occasional stray keyword, as in real prose.
            if rng.gen_bool(0.1) {
                sentence(rng, KEYWORDS)
            } else {
                sentence(rng, &topic)
            }
        })
        .collect();
    let refs: Vec<String> = (0..8).map(|_| reference_entry(rng, &topic)).collect();
    assemble(&title, &abstract_s, &body, &refs)
}

/// Writes `n_generated` + `n_human` documents under `dir/generated` and
/// `dir/human`. Deterministic for a given seed.
pub fn write_fixture_corpus(
    dir: &Path,
    n_generated: usize,
    n_human: usize,
    seed: u64,
) -> io::Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let gen_dir = dir.join("generated");
    let hum_dir = dir.join("human");
    std::fs::create_dir_all(&gen_dir)?;
    std::fs::create_dir_all(&hum_dir)?;
    for i in 0..n_generated {
        std::fs::write(gen_dir.join(format!("gen_{i:03}.txt")), generated_doc(&mut rng))?;
    }
    for i in 0..n_human {
        std::fs::write(hum_dir.join(format!("hum_{i:03}.txt")), human_doc(&mut rng))?;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn documents_are_deterministic_per_seed() {
        let mut a = ChaCha8Rng::seed_from_u64(7);
        let mut b = ChaCha8Rng::seed_from_u64(7);
        assert_eq!(generated_doc(&mut a), generated_doc(&mut b));
        assert_eq!(human_doc(&mut a), human_doc(&mut b));
    }

    #[test]
    fn documents_have_section_keywords() {
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for doc in [generated_doc(&mut rng), human_doc(&mut rng)] {
            assert!(doc.contains("Abstract"));
            assert!(doc.contains("Introduction"));
            assert!(doc.contains("References"));
        }
    }

    #[test]
    fn templates_fill_every_slot() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        for _ in 0..50 {
            let s = sentence(&mut rng, KEYWORDS);
            assert!(!s.contains("{}"), "unfilled slot in {s:?}");
        }
    }
}
