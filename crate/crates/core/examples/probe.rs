//! Dev probe: locates the first positivity failure at d = 3/2 and times the
//! symbolic Jones-Wenzl computations. Temporary, removed before release.

use okd::linalg::PsdVerdict;
use okd::morphisms::jones_wenzl;
use okd::scalars::{FieldContext, Rat, RatFn};
use okd::star::gram_psd_verdict;
use okd::words::{Letter, Word};
use std::time::Instant;

fn all_words(len: usize) -> Vec<Word> {
    (0..(1u32 << len))
        .map(|bits| {
            Word::from_letters(
                (0..len)
                    .map(|i| {
                        if bits >> i & 1 == 0 {
                            Letter::X
                        } else {
                            Letter::Xstar
                        }
                    })
                    .collect(),
            )
        })
        .collect()
}

fn main() {
    // PSD failures at d = 3/2
    let ctx = FieldContext::one_param(Rat::new(3, 2)).unwrap();
    'outer: for len in 1..=10usize {
        let t0 = Instant::now();
        let mut failures = Vec::new();
        for w in all_words(len) {
            if !okd::words::homset_nonempty(&Word::empty(), &w) {
                continue;
            }
            match gram_psd_verdict(&w, &ctx).unwrap() {
                PsdVerdict::Psd => {}
                verdict => failures.push((w, verdict)),
            }
        }
        println!(
            "len {len}: {} failures ({:?})",
            failures.len(),
            t0.elapsed()
        );
        for (w, v) in failures.iter().take(5) {
            println!("   first failing words: {w}  -> {v:?}");
        }
        if !failures.is_empty() {
            println!("FIRST FAILURE AT LEN {len}");
            break 'outer;
        }
    }

    // PSD sanity at d in {2, 5/2, 3} for len <= 8
    for (p, q) in [(2i64, 1i64), (5, 2), (3, 1)] {
        let ctx = FieldContext::one_param(Rat::new(p, q)).unwrap();
        let t0 = Instant::now();
        let mut checked = 0;
        for len in 1..=8usize {
            for w in all_words(len) {
                if !okd::words::homset_nonempty(&Word::empty(), &w) {
                    continue;
                }
                assert!(gram_psd_verdict(&w, &ctx).unwrap().is_psd(), "{w} at {p}/{q}");
                checked += 1;
            }
        }
        println!("d = {p}/{q}: {checked} words PSD, {:?}", t0.elapsed());
    }

    // JW timing, symbolic
    let gen = FieldContext::generic();
    for n in 1..=6usize {
        let t0 = Instant::now();
        let f = jones_wenzl::<RatFn>(n, Letter::X, &gen).unwrap();
        let build = t0.elapsed();
        let t1 = Instant::now();
        let sq = f.compose(&f, &gen).unwrap();
        assert_eq!(sq, f);
        println!(
            "f_{n}: {} terms, build {build:?}, square {:?}",
            f.term_count(),
            t1.elapsed()
        );
    }
}
