use std::time::Instant;

use bessel_bounds::tables::{relative_errors, reproduce_table, Table, TableCell, TABLE_NU, TABLE_TOL, TABLE_X};

fn cell(cells: &[TableCell], nu: f64, x: f64) -> &TableCell {
    cells.iter().find(|c| c.nu == nu && c.x == x).expect("grid point")
}

#[test]
fn both_tables_match_the_reference() {
    let start = Instant::now();
    for t in [Table::T1, Table::T2] {
        let cells = reproduce_table(t);
        assert_eq!(cells.len(), 42);
        for c in &cells {
            let d = c.diff().expect("every cell has a reference");
            assert!(d <= TABLE_TOL + 1e-12, "{t} nu={} x={}: {} vs {:?}", c.nu, c.x, c.rel_err, c.reference);
        }
    }
    assert!(start.elapsed().as_secs_f64() < 60.0);
}

#[test]
fn documented_cells() {
    let t1 = reproduce_table(Table::T1);
    let t2 = reproduce_table(Table::T2);
    assert_eq!(cell(&t1, 0.0, 5.0).rel_err, 0.2359);
    assert_eq!(cell(&t2, -0.25, 5.0).rel_err, 0.4675);
    assert_eq!(cell(&t2, 2.5, 10.0).rel_err, 0.0144);
}

#[test]
fn row_shapes() {
    let t1 = reproduce_table(Table::T1);
    let t2 = reproduce_table(Table::T2);
    for nu in TABLE_NU {
        let row: Vec<f64> = TABLE_X.iter().map(|&x| cell(&t1, nu, x).raw).collect();
        assert!(row.windows(2).all(|w| w[0] > w[1]), "T1 row nu={nu}: {row:?}");
        // the upper approximation's error first grows, then decays
        assert!(cell(&t2, nu, 0.5).raw < cell(&t2, nu, 5.0).raw, "T2 row nu={nu}");
    }
}

#[test]
fn upper_error_vanishes_at_origin() {
    for nu in [0.0, 2.5] {
        let (lo, up) = relative_errors(nu, 1e-3).unwrap();
        assert!(up.abs() <= 1e-3, "nu={nu}: {up}");
        assert!(lo > 0.0 && up > 0.0);
    }
}

#[test]
fn table_names_parse() {
    assert_eq!("1".parse::<Table>().unwrap(), Table::T1);
    assert_eq!("T2".parse::<Table>().unwrap(), Table::T2);
    assert!("3".parse::<Table>().is_err());
}
