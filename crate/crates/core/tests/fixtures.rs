//! The bundled planar-code fixtures: complete isomer sets for orders 20,
//! 24, 26, 28 and 30, plus one isolated-pentagon graph of order 60. Every
//! expected number below was computed with an out-of-tree implementation
//! and cross-checked against published reference values before freezing.

mod common;

use std::collections::BTreeMap;

use fullerene_core::codec::{encode_record, PlanarCodeReader, HEADER};
use fullerene_core::families::{wiener_formula, FamilyKind};
use fullerene_core::metrics;
use fullerene_core::scan::{scan, ScanOptions};

struct Expected {
    wiener: u64,
    complexity: u32,
    diameter: u32,
    parts: u32,
    isolated: u32,
    ipr: bool,
}

const fn exp(wiener: u64, complexity: u32, diameter: u32, parts: u32) -> Expected {
    Expected { wiener, complexity, diameter, parts, isolated: 0, ipr: false }
}

fn fixture_expectations() -> Vec<(&'static str, Vec<Expected>)> {
    vec![
        ("f020.plc", vec![exp(500, 1, 5, 1)]),
        ("f024.plc", vec![exp(804, 2, 5, 1)]),
        ("f026.plc", vec![exp(987, 2, 6, 1)]),
        ("f028.plc", vec![exp(1198, 5, 6, 1), exp(1194, 2, 6, 1)]),
        ("f030.plc", vec![exp(1435, 3, 6, 2), exp(1431, 7, 6, 1), exp(1429, 6, 6, 1)]),
        (
            "c60_ipr.plc",
            vec![Expected {
                wiener: 8340,
                complexity: 1,
                diameter: 9,
                parts: 12,
                isolated: 12,
                ipr: true,
            }],
        ),
    ]
}

fn graphs_of(name: &str) -> Vec<fullerene_core::FullereneGraph> {
    let bytes = common::read_fixture(name);
    PlanarCodeReader::new(bytes.as_slice()).map(|g| g.unwrap()).collect()
}

#[test]
fn every_fixture_graph_is_a_valid_fullerene() {
    for (name, expected) in fixture_expectations() {
        let graphs = graphs_of(name);
        assert_eq!(graphs.len(), expected.len(), "{name}");
        for g in &graphs {
            let report = g.validate();
            assert!(report.is_valid(), "{name}: {:?}", report.failures);
        }
    }
}

#[test]
fn fixture_invariants_match_frozen_values() {
    for (name, expected) in fixture_expectations() {
        let graphs = graphs_of(name);
        for (i, (g, want)) in graphs.iter().zip(&expected).enumerate() {
            let r = metrics::report(g).unwrap();
            assert_eq!(r.wiener, want.wiener, "{name}[{i}] W");
            assert_eq!(r.complexity, want.complexity, "{name}[{i}] C_W");
            assert_eq!(r.diameter, want.diameter, "{name}[{i}] D");
            assert_eq!(r.pentagons.parts, want.parts, "{name}[{i}] N_p");
            assert_eq!(r.pentagons.isolated, want.isolated, "{name}[{i}] N_5");
            assert_eq!(r.pentagons.ipr, want.ipr, "{name}[{i}] IPR");
        }
    }
}

#[test]
fn dodecahedron_fixture_transmissions_all_fifty() {
    let graphs = graphs_of("f020.plc");
    let tv = metrics::transmissions(&graphs[0]);
    assert_eq!(tv.len(), 20);
    assert!(tv.transmissions().iter().all(|&t| t == 50));
}

#[test]
fn order_26_maximum_is_the_type_b_tube() {
    // the single order-26 isomer is the k=5 member of family b
    let graphs = graphs_of("f026.plc");
    assert_eq!(metrics::wiener_index(&graphs[0]), wiener_formula(FamilyKind::B, 26).unwrap());
}

#[test]
fn codec_round_trip_is_record_exact_on_all_fixtures() {
    for (name, _) in fixture_expectations() {
        let bytes = common::read_fixture(name);
        let mut reader = PlanarCodeReader::new(bytes.as_slice());
        let mut rebuilt = Vec::from(HEADER);
        while let Some(record) = reader.next_record().unwrap() {
            let g = record.graph.as_ref().unwrap();
            let re = encode_record(g, record.wide).unwrap();
            assert_eq!(re, record.bytes, "{name} record {}", record.ordinal);
            rebuilt.extend_from_slice(&re);
        }
        assert_eq!(rebuilt, bytes, "{name} full file");
    }
}

#[test]
fn scan_summaries_match_reference_rows() {
    // (fixture, n, C_n, g_n, N, W_m, C_W of the max-W graph, D of it)
    let rows = [
        ("f020.plc", 20u32, 1u32, 19u32, 1u64, 500u64, 1u32, 5u32),
        ("f024.plc", 24, 2, 22, 1, 804, 2, 5),
        ("f026.plc", 26, 2, 24, 1, 987, 2, 6),
        ("f028.plc", 28, 5, 23, 1, 1198, 5, 6),
        ("f030.plc", 30, 7, 23, 1, 1435, 3, 6),
    ];
    for (name, n, c_n, g_n, count, w_m, c_of_wm, d_of_wm) in rows {
        let bytes = common::read_fixture(name);
        let outcome = scan(bytes.as_slice(), &ScanOptions::default()).unwrap();
        let report = outcome.single().unwrap();
        assert_eq!(report.order, n, "{name}");
        assert_eq!(report.max_complexity, c_n, "{name} C_n");
        assert_eq!(report.gap(), g_n, "{name} g_n");
        assert_eq!(report.max_complexity_count, count, "{name} N");
        assert_eq!(report.max_wiener, w_m, "{name} W_m");
        assert_eq!(report.max_wiener_complexity, c_of_wm, "{name} C_W of W_m");
        assert_eq!(report.max_wiener_diameter, d_of_wm, "{name} D of W_m");
        assert!(!report.has_transmission_irregular(), "{name}");
        let histogram_total: u64 = report.histogram.values().sum();
        assert_eq!(histogram_total, report.total, "{name}");
    }
}

#[test]
fn order_28_max_complexity_graph_is_the_max_wiener_graph() {
    let bytes = common::read_fixture("f028.plc");
    let outcome = scan(bytes.as_slice(), &ScanOptions::default()).unwrap();
    let report = outcome.single().unwrap();
    assert_eq!(
        report.max_complexity_records[0].ordinal,
        report.max_wiener_records[0].ordinal
    );
    assert_eq!(report.max_complexity_wieners, BTreeMap::from([(1198, 1)]));
}

#[test]
fn pentagon_histograms_of_the_small_corpus() {
    let bytes = common::read_fixture("f020.plc");
    let hists =
        fullerene_core::scan::pentagon_histograms(bytes.as_slice(), false, &ScanOptions::default())
            .unwrap();
    assert_eq!(hists.parts, BTreeMap::from([(1, 1)]));
    assert_eq!(hists.isolated, BTreeMap::from([(0, 1)]));

    let bytes = common::read_fixture("c60_ipr.plc");
    let hists =
        fullerene_core::scan::pentagon_histograms(bytes.as_slice(), false, &ScanOptions::default())
            .unwrap();
    assert_eq!(hists.parts, BTreeMap::from([(12, 1)]));
    assert_eq!(hists.isolated, BTreeMap::from([(12, 1)]));
}
