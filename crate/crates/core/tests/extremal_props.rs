use kekule_core::extremal::max_size_search;
use kekule_core::{f, sample_member};

#[test]
fn sampled_members_respect_the_bound() {
    for n in [4, 5] {
        let bound = f(n).unwrap();
        for seed in 0..10_000 {
            let g = sample_member(n, seed).unwrap();
            assert_eq!(g.order(), 2 * n);
            assert!(g.size() <= bound, "n={n} seed={seed}: {} edges", g.size());
        }
    }
}

#[test]
fn search_over_samples_stays_within_bound() {
    for n in 4..=6 {
        let r = max_size_search((0..300).map(|s| sample_member(n, s).unwrap()), n).unwrap();
        assert_eq!(r.members, 300);
        assert!(r.within_bound().unwrap());
    }
}
