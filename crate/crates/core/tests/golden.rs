use minorcat::experiments::write_json_lines;
use minorcat::graph::enumerate_connected_graphs;
use minorcat::swiatkowski::{generator_search, rank_formula};

fn check(i: usize, fixture: &str) {
    let rows = generator_search(i).unwrap();
    let mut buf = Vec::new();
    write_json_lines(&mut buf, &rows).unwrap();
    assert_eq!(String::from_utf8(buf).unwrap(), fixture);

    let classes = enumerate_connected_graphs(2 * i);
    for (row, g) in rows.iter().zip(&classes) {
        assert_eq!(Some(row.graph.as_str()), g.name());
        assert_eq!(row.rank as u128, rank_formula(g, i, i));
        assert!(row.image_rank <= row.rank);
        assert_eq!(row.cokernel.rank + row.image_rank, row.rank);
        assert!(row.generators <= row.cokernel.rank + row.cokernel.torsion.len());
    }
}

#[test]
fn degree_one_generators() {
    check(1, include_str!("fixtures/generators_i1.jsonl"));
}

#[test]
fn degree_two_generators() {
    check(2, include_str!("fixtures/generators_i2.jsonl"));
}
