mod common;

use cliquetree::enumeration::{build_extremal, class_g, enumerate_clique_trees, extremal_partition};
use cliquetree::graph_core::{figure_one, CliqueTreeStructure};
use cliquetree::spectral::{adjacency_eigenvalues, quotient_matrix, spectral_radius, DEFAULT_TOL};
use cliquetree::zero_forcing::{
    forcing_closure, valid_k_range, zero_forcing_number_exhaustive, zero_forcing_number_formula,
};
use cliquetree::Graph;
use common::*;

#[test]
fn enumeration_matches_labeled_scan() {
    for n in 3..=7 {
        let ours = enumerate_clique_trees(n, 3, 14).unwrap();
        let oracle = clique_trees_by_labeled_scan(n);
        assert_eq!(ours.len(), oracle.len(), "n = {n}");
        for g in &oracle {
            assert!(ours.iter().any(|t| isomorphic(&t.graph, g)), "n = {n}: class missing");
        }
    }
}

#[test]
fn enumeration_matches_recipe_scan() {
    for n in 3..=10 {
        let ours = enumerate_clique_trees(n, 3, 14).unwrap();
        let oracle = clique_trees_by_recipes(n);
        assert_eq!(ours.len(), oracle.len(), "n = {n}");
        for (i, a) in ours.iter().enumerate() {
            for b in &ours[i + 1..] {
                assert!(!isomorphic(&a.graph, &b.graph), "n = {n}: {} ~ {}", a.key, b.key);
            }
        }
    }
}

#[test]
fn zero_forcing_agrees_with_naive_search() {
    for n in 3..=9 {
        for t in enumerate_clique_trees(n, 3, 14).unwrap() {
            let naive = naive_zero_forcing_number(&t.graph);
            let (z, w) = zero_forcing_number_exhaustive(&t.graph, 16).unwrap();
            assert_eq!(z, naive, "{}", t.key);
            assert_eq!(zero_forcing_number_formula(&t.structure).unwrap(), naive);
            assert_eq!(w.len(), z);
            assert!(forcing_closure(&t.graph, &w).unwrap().is_complete(n));
        }
    }
}

#[test]
fn figure_one_zero_forcing() {
    let g = figure_one();
    assert_eq!(naive_zero_forcing_number(&g), 8);
    assert_eq!(zero_forcing_number_exhaustive(&g, 16).unwrap().0, 8);
}

#[test]
fn extremal_witness_closes() {
    let g = build_extremal(8, 5).unwrap();
    let (z, w) = zero_forcing_number_exhaustive(&g, 16).unwrap();
    assert_eq!(z, 5);
    assert_eq!(forcing_closure(&g, &w).unwrap().blue, (0..8).collect::<Vec<_>>());
}

#[test]
fn spectra_agree_with_jacobi() {
    let mut graphs: Vec<Graph> = vec![figure_one(), Graph::path(7), Graph::star(6), Graph::complete(5)];
    for n in 4..=12 {
        let (lo, hi) = valid_k_range(n).unwrap();
        for k in lo..=hi {
            graphs.push(build_extremal(n, k).unwrap());
        }
    }
    for g in &graphs {
        let oracle = jacobi_eigenvalues(g);
        let ours = adjacency_eigenvalues(g);
        for (a, b) in oracle.iter().zip(&ours) {
            assert!((a - b).abs() < 1e-9, "{a} vs {b}");
        }
        let rho = spectral_radius(g, DEFAULT_TOL).unwrap().rho;
        assert!((rho - oracle.last().unwrap()).abs() < 1e-9);
    }
}

#[test]
fn friendship_graph_radius_is_three() {
    let rho = spectral_radius(&build_extremal(7, 4).unwrap(), DEFAULT_TOL).unwrap().rho;
    assert!((rho - 3.0).abs() < 1e-12);
    assert!((jacobi_eigenvalues(&build_extremal(7, 4).unwrap())[6] - 3.0).abs() < 1e-12);
}

#[test]
fn class_sizes_partition_enumeration() {
    for n in 4..=11 {
        let all = enumerate_clique_trees(n, 3, 14).unwrap().len();
        let (lo, hi) = valid_k_range(n).unwrap();
        let total: usize = (lo..=hi).map(|k| class_g(n, k, 14).unwrap().len()).sum();
        assert_eq!(total, all, "n = {n}");
    }
}

#[test]
fn extremal_partition_is_equitable_by_hand() {
    for n in 4..=20 {
        let (lo, hi) = valid_k_range(n).unwrap();
        for k in lo..=hi {
            let g = build_extremal(n, k).unwrap();
            let parts = extremal_partition(n, k).unwrap();
            let a = adjacency(&g);
            for p in &parts {
                for r in &parts {
                    let counts: Vec<usize> = p.iter().map(|&u| r.iter().filter(|&&w| a[u][w]).count()).collect();
                    assert!(counts.iter().all(|&c| c == counts[0]));
                }
            }
            assert!(quotient_matrix(&g, &parts).unwrap().equitable);
            let ct = CliqueTreeStructure::of(&g).unwrap();
            assert_eq!(ct.cut_vertices().len(), usize::from(k < n - 1));
        }
    }
}
