// Multiplication tables of the complex Jordan algebras of dimension at most 4,
// in soliton form. Basis order: e_1, e_2, ..., then n_1, n_2, ....

use super::{Coef, Raw, Table};

fn s(x: f64) -> f64 {
    x.sqrt()
}

macro_rules! k {
    ($e:expr) => {
        Coef { value: $e, tag: stringify!($e) }
    };
}

pub(super) fn raw() -> Vec<Raw> {
    vec![
        Raw {
            name: "A_1_1",
            dim: 1,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1")]),
            flags: "A, S",
            decomposition: "",
            stratum: "S1A",
        },
        Raw {
            name: "A_2_1",
            dim: 2,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(1.0), "n1")]),
            flags: "A, U",
            decomposition: "",
            stratum: "S2B",
        },
        Raw {
            name: "A_2_2",
            dim: 2,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(0.5), "n1")]),
            flags: "-",
            decomposition: "",
            stratum: "S2B",
        },
        Raw {
            name: "A_2_3",
            dim: 2,
            table: Table::Products(vec![("n1n1", k!(1.0), "n2")]),
            flags: "A, N",
            decomposition: "",
            stratum: "S2C",
        },
        Raw {
            name: "A_2_4",
            dim: 2,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e2e2", k!(1.0), "e2")]),
            flags: "A, SS, D",
            decomposition: "A_1_1 A_1_1",
            stratum: "S2A",
        },
        Raw {
            name: "A_2_5",
            dim: 2,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1")]),
            flags: "A, D",
            decomposition: "A_1_1 T",
            stratum: "S2B",
        },
        Raw {
            name: "A_3_1",
            dim: 3,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e2e2", k!(1.0), "e2"), ("e3e3", k!(1.0), "e3")]),
            flags: "SS, A, D",
            decomposition: "A_1_1 A_1_1 A_1_1",
            stratum: "S3A",
        },
        Raw {
            name: "A_3_2",
            dim: 3,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e2e2", k!(s(5.0) / 2.0), "e1"), ("e3e3", k!(s(5.0) / 2.0), "e1"), ("e1e2", k!(1.0), "e2"), ("e1e3", k!(1.0), "e3")]),
            flags: "S",
            decomposition: "",
            stratum: "S3A",
        },
        Raw {
            name: "A_3_3",
            dim: 3,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e2e2", k!(s(3.0)), "e2"), ("e1n1", k!(1.0), "n1")]),
            flags: "A, U, D",
            decomposition: "A_2_1 A_1_1",
            stratum: "S3B",
        },
        Raw {
            name: "A_3_4",
            dim: 3,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e2e2", k!(s(5.0 / 3.0)), "e1"), ("e1e2", k!(1.0), "e2"), ("e1n1", k!(1.0), "n1")]),
            flags: "U",
            decomposition: "",
            stratum: "S3B",
        },
        Raw {
            name: "A_3_5",
            dim: 3,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e2e2", k!(s(3.0 / 2.0)), "e2"), ("e1n1", k!(0.5), "n1")]),
            flags: "D",
            decomposition: "A_2_2 A_1_1",
            stratum: "S3B",
        },
        Raw {
            name: "A_3_6",
            dim: 3,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e2e2", k!(1.0), "e2")]),
            flags: "A, D",
            decomposition: "A_1_1 A_1_1 T",
            stratum: "S3B",
        },
        Raw {
            name: "A_3_7",
            dim: 3,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(1.0), "n1"), ("e1n2", k!(1.0), "n2"), ("n1n1", k!(1.0), "n2")]),
            flags: "A, U",
            decomposition: "",
            stratum: "S3C",
        },
        Raw {
            name: "A_3_8",
            dim: 3,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(1.0), "n1"), ("e1n2", k!(1.0), "n2")]),
            flags: "A, U",
            decomposition: "",
            stratum: "S3D",
        },
        Raw {
            name: "A_3_9",
            dim: 3,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(1.0), "n1")]),
            flags: "A, D",
            decomposition: "A_2_1 T",
            stratum: "S3D",
        },
        Raw {
            name: "A_3_10",
            dim: 3,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(0.5), "n1"), ("e1n2", k!(1.0), "n2"), ("n1n1", k!(s(7.0 / 10.0)), "n2")]),
            flags: "-",
            decomposition: "",
            stratum: "S3C",
        },
        Raw {
            name: "A_3_11",
            dim: 3,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(0.5), "n1"), ("e1n2", k!(1.0), "n2")]),
            flags: "-",
            decomposition: "",
            stratum: "S3D",
        },
        Raw {
            name: "A_3_12",
            dim: 3,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(0.5), "n1"), ("e1n2", k!(0.5), "n2")]),
            flags: "-",
            decomposition: "",
            stratum: "S3D",
        },
        Raw {
            name: "A_3_13",
            dim: 3,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(0.5), "n1"), ("n1n1", k!(s(3.0 / 10.0)), "n2")]),
            flags: "-",
            decomposition: "",
            stratum: "S3C",
        },
        Raw {
            name: "A_3_14",
            dim: 3,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(0.5), "n1")]),
            flags: "D",
            decomposition: "A_2_2 T",
            stratum: "S3D",
        },
        Raw {
            name: "A_3_15",
            dim: 3,
            table: Table::Products(vec![("e1e1", k!(s(5.0)), "e1"), ("n1n1", k!(1.0), "n2")]),
            flags: "A, D",
            decomposition: "A_2_3 A_1_1",
            stratum: "S3C",
        },
        Raw {
            name: "A_3_16",
            dim: 3,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1")]),
            flags: "A, D",
            decomposition: "A_1_1 T T",
            stratum: "S3D",
        },
        Raw {
            name: "A_3_17",
            dim: 3,
            table: Table::Products(vec![("n1n1", k!(1.0), "n2"), ("n1n2", k!(1.0), "n3")]),
            flags: "A, N",
            decomposition: "",
            stratum: "S3E",
        },
        Raw {
            name: "A_3_18",
            dim: 3,
            table: Table::Products(vec![("n1n2", k!(1.0), "n3")]),
            flags: "A, N",
            decomposition: "",
            stratum: "S3F",
        },
        Raw {
            name: "A_3_19",
            dim: 3,
            table: Table::Products(vec![("n1n1", k!(1.0), "n2")]),
            flags: "A, N, D",
            decomposition: "A_2_3 T",
            stratum: "S3G",
        },
        Raw {
            name: "A_4_1",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e2e2", k!(s(5.0) / 2.0), "e1"), ("e3e3", k!(s(5.0) / 2.0), "e1"), ("e1e2", k!(1.0), "e2"), ("e1e3", k!(1.0), "e3"), ("e4e4", k!(s(5.0 / 2.0)), "e4")]),
            flags: "SS, D",
            decomposition: "",
            stratum: "S4A",
        },
        Raw {
            name: "A_4_2",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1e2", k!(1.0), "e2"), ("e1e3", k!(1.0), "e3"), ("e1e4", k!(1.0), "e4"), ("e2e3", k!(s(7.0 / 5.0)), "e1"), ("e4e4", k!(s(7.0 / 5.0)), "e1")]),
            flags: "S",
            decomposition: "",
            stratum: "S4A",
        },
        Raw {
            name: "A_4_3",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e2e2", k!(1.0), "e2"), ("e3e3", k!(1.0), "e3"), ("e4e4", k!(1.0), "e4")]),
            flags: "SS, A, D",
            decomposition: "A_1_1 A_1_1 A_1_1 A_1_1",
            stratum: "S4A",
        },
        Raw {
            name: "A_4_4",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(1.0), "n1"), ("e2e2", k!(s(3.0)), "e2"), ("e3e3", k!(s(3.0)), "e3")]),
            flags: "U, A, D",
            decomposition: "A_2_1 A_1_1 A_1_1",
            stratum: "S4B",
        },
        Raw {
            name: "A_4_5",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e2e2", k!(1.0), "e2"), ("e3e3", k!(1.0), "e3")]),
            flags: "A, D",
            decomposition: "A_1_1 A_1_1 A_1_1 T",
            stratum: "S4B",
        },
        Raw {
            name: "A_4_6",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e2e2", k!(s(3.0 / 2.0)), "e2"), ("e3e3", k!(s(3.0 / 2.0)), "e3"), ("e1n1", k!(0.5), "n1")]),
            flags: "D",
            decomposition: "A_2_2 A_1_1 A_1_1",
            stratum: "S4B",
        },
        Raw {
            name: "A_4_7",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e2e2", k!(s(5.0 / 3.0)), "e1"), ("e1e2", k!(1.0), "e2"), ("e1n1", k!(1.0), "n1"), ("e3e3", k!(s(10.0 / 3.0)), "e3")]),
            flags: "U, D",
            decomposition: "A_3_4 A_1_1",
            stratum: "S4B",
        },
        Raw {
            name: "A_4_8",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e2e2", k!(s(5.0) / 2.0), "e1"), ("e3e3", k!(s(5.0) / 2.0), "e1"), ("e1e2", k!(1.0), "e2"), ("e1e3", k!(1.0), "e3")]),
            flags: "D",
            decomposition: "A_3_2 T",
            stratum: "S4B",
        },
        Raw {
            name: "A_4_9",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e2e2", k!(s(7.0) / 2.0), "e1"), ("e3e3", k!(s(7.0) / 2.0), "e1"), ("e1e2", k!(1.0), "e2"), ("e1e3", k!(1.0), "e3"), ("e1n1", k!(1.0), "n1")]),
            flags: "U",
            decomposition: "",
            stratum: "S4B",
        },
        Raw {
            name: "A_4_10",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(0.5), "n1"), ("e2e2", k!(s(3.0 / 2.0)), "e2")]),
            flags: "D",
            decomposition: "A_2_2 A_1_1 T",
            stratum: "S4D",
        },
        Raw {
            name: "A_4_11",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e2e2", k!(s(5.0 / 3.0)), "e1"), ("e1e2", k!(1.0), "e2"), ("e1n1", k!(1.0), "n1")]),
            flags: "D",
            decomposition: "A_3_4 T",
            stratum: "S4D",
        },
        Raw {
            name: "A_4_12",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e2e2", k!(s(2.0)), "e2"), ("e1n1", k!(0.5), "n1"), ("e1n2", k!(0.5), "n2")]),
            flags: "D",
            decomposition: "A_3_12 A_1_1",
            stratum: "S4D",
        },
        Raw {
            name: "A_4_13",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e2e2", k!(1.0), "e2"), ("e1n1", k!(0.5), "n1"), ("e2n2", k!(0.5), "n2")]),
            flags: "D",
            decomposition: "A_2_2 A_2_2",
            stratum: "S4D",
        },
        Raw {
            name: "A_4_14",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(0.5), "n1"), ("e1n2", k!(1.0), "n2"), ("e2e2", k!(s(7.0 / 2.0)), "e2")]),
            flags: "D",
            decomposition: "A_3_11 A_1_1",
            stratum: "S4D",
        },
        Raw {
            name: "A_4_15",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e2e2", k!(s(2.0)), "e2"), ("e1n1", k!(1.0), "n1"), ("e2n2", k!(1.0 / s(2.0)), "n2")]),
            flags: "D",
            decomposition: "A_2_1 A_2_2",
            stratum: "S4D",
        },
        Raw {
            name: "A_4_16",
            dim: 4,
            table: Table::Family { k: 1.20577, t: 1.22166, wide: false, ell: None },
            flags: "none",
            decomposition: "",
            stratum: "S4D",
        },
        Raw {
            name: "A_4_17",
            dim: 4,
            table: Table::Family { k: 1.54492, t: 1.45358, wide: true, ell: None },
            flags: "U",
            decomposition: "",
            stratum: "S4D",
        },
        Raw {
            name: "A_4_18",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e2e2", k!(s(7.0 / 3.0)), "e1"), ("e1e2", k!(1.0), "e2"), ("e1n1", k!(1.0), "n1"), ("e1n2", k!(1.0), "n2")]),
            flags: "U",
            decomposition: "",
            stratum: "S4D",
        },
        Raw {
            name: "A_4_19",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e2e2", k!(1.0), "e2")]),
            flags: "A, D",
            decomposition: "A_1_1 A_1_1 T T",
            stratum: "S4D",
        },
        Raw {
            name: "A_4_20",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e2e2", k!(s(3.0)), "e2"), ("e1n1", k!(1.0), "n1")]),
            flags: "A, D",
            decomposition: "A_2_1 A_1_1 T",
            stratum: "S4D",
        },
        Raw {
            name: "A_4_21",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e2e2", k!(s(5.0)), "e2"), ("e1n1", k!(1.0), "n1"), ("e1n2", k!(1.0), "n2")]),
            flags: "A, U, D",
            decomposition: "A_3_8 A_1_1",
            stratum: "S4D",
        },
        Raw {
            name: "A_4_22",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e2e2", k!(1.0), "e2"), ("e1n1", k!(1.0), "n1"), ("e2n2", k!(1.0), "n2")]),
            flags: "A, U, D",
            decomposition: "A_2_1 A_2_1",
            stratum: "S4D",
        },
        Raw {
            name: "A_4_23",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(0.5), "n1"), ("n1n1", k!(s(3.0 / 10.0)), "n2"), ("e2e2", k!(s(3.0 / 2.0)), "e2")]),
            flags: "D",
            decomposition: "A_3_13 A_1_1",
            stratum: "S4C",
        },
        Raw {
            name: "A_4_24",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(0.5), "n1"), ("e1n2", k!(1.0), "n2"), ("n1n1", k!(s(7.0 / 10.0)), "n2"), ("e2e2", k!(s(7.0 / 2.0)), "e2")]),
            flags: "D",
            decomposition: "A_3_10 A_1_1",
            stratum: "S4C",
        },
        Raw {
            name: "A_4_25",
            dim: 4,
            table: Table::Family { k: 1.54492, t: 1.45358, wide: true, ell: Some(0.836502) },
            flags: "U",
            decomposition: "",
            stratum: "S4C",
        },
        Raw {
            name: "A_4_26",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e2e2", k!(1.0), "e2"), ("n1n1", k!(1.0 / s(5.0)), "n2")]),
            flags: "A, D",
            decomposition: "A_2_3 A_1_1 A_1_1",
            stratum: "S4C",
        },
        Raw {
            name: "A_4_27",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(1.0), "n1"), ("e1n2", k!(1.0), "n2"), ("n1n1", k!(1.0), "n2"), ("e2e2", k!(s(5.0)), "e2")]),
            flags: "U, A, D",
            decomposition: "A_3_7 A_1_1",
            stratum: "S4C",
        },
        Raw {
            name: "A_4_28",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(0.5), "n1")]),
            flags: "D",
            decomposition: "A_2_2 T T",
            stratum: "S4I",
        },
        Raw {
            name: "A_4_29",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(0.5), "n1"), ("e1n2", k!(1.0), "n2")]),
            flags: "D",
            decomposition: "A_3_11 T",
            stratum: "S4I",
        },
        Raw {
            name: "A_4_30",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(0.5), "n1"), ("e1n2", k!(0.5), "n2")]),
            flags: "D",
            decomposition: "A_3_12 T",
            stratum: "S4I",
        },
        Raw {
            name: "A_4_31",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(1.0), "n1"), ("e1n2", k!(1.0), "n2"), ("e1n3", k!(0.5), "n3")]),
            flags: "-",
            decomposition: "",
            stratum: "S4I",
        },
        Raw {
            name: "A_4_32",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(0.5), "n1"), ("e1n2", k!(0.5), "n2"), ("e1n3", k!(1.0), "n3")]),
            flags: "-",
            decomposition: "",
            stratum: "S4I",
        },
        Raw {
            name: "A_4_33",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(0.5), "n1"), ("e1n2", k!(0.5), "n2"), ("e1n3", k!(0.5), "n3")]),
            flags: "-",
            decomposition: "",
            stratum: "S4I",
        },
        Raw {
            name: "A_4_34",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1")]),
            flags: "A, D",
            decomposition: "A_1_1 T T T",
            stratum: "S4I",
        },
        Raw {
            name: "A_4_35",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(1.0), "n1")]),
            flags: "A, D",
            decomposition: "A_2_1 T T",
            stratum: "S4I",
        },
        Raw {
            name: "A_4_36",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(1.0), "n1"), ("e1n2", k!(1.0), "n2"), ("e1n3", k!(1.0), "n3")]),
            flags: "U, A",
            decomposition: "",
            stratum: "S4I",
        },
        Raw {
            name: "A_4_37",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(1.0), "n1"), ("e1n2", k!(1.0), "n2")]),
            flags: "A, D",
            decomposition: "A_3_8 T",
            stratum: "S4I",
        },
        Raw {
            name: "A_4_38",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(s(7.0)), "e1"), ("n1n1", k!(1.0), "n2"), ("n1n2", k!(1.0), "n3")]),
            flags: "A, D",
            decomposition: "A_3_17 A_1_1",
            stratum: "S4E",
        },
        Raw {
            name: "A_4_39",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(1.0), "n1"), ("e1n2", k!(1.0), "n2"), ("e1n3", k!(1.0), "n3"), ("n1n1", k!(1.0), "n2"), ("n1n2", k!(1.0), "n3")]),
            flags: "U, A",
            decomposition: "",
            stratum: "S4E",
        },
        Raw {
            name: "A_4_40",
            dim: 4,
            table: Table::Products(vec![("n1n1", k!(1.0), "n2"), ("e1e1", k!(s(5.0)), "e1")]),
            flags: "D",
            decomposition: "A_2_3 A_1_1 T",
            stratum: "S4H",
        },
        Raw {
            name: "A_4_41",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(s(6.0)), "e1"), ("n1n2", k!(1.0), "n3")]),
            flags: "A, D",
            decomposition: "A_3_18 A_1_1",
            stratum: "S4F",
        },
        Raw {
            name: "A_4_42",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(1.0), "n1"), ("e1n2", k!(1.0), "n2"), ("e1n3", k!(1.0), "n3"), ("n1n1", k!(s(7.0 / 5.0)), "n2")]),
            flags: "U, A",
            decomposition: "",
            stratum: "S4H",
        },
        Raw {
            name: "A_4_43",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(1.0), "n1"), ("e1n2", k!(1.0), "n2"), ("e1n3", k!(1.0), "n3"), ("n1n1", k!(s(7.0 / 6.0)), "n3"), ("n2n2", k!(s(7.0 / 6.0)), "n3")]),
            flags: "U, A",
            decomposition: "",
            stratum: "S4F",
        },
        Raw {
            name: "A_4_44",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(s(10.0 / 3.0)), "e1"), ("e1n1", k!(s(5.0 / 6.0)), "n1"), ("n1n1", k!(1.0), "n2")]),
            flags: "D",
            decomposition: "A_3_13 T",
            stratum: "S4H",
        },
        Raw {
            name: "A_4_45",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(2.0), "e1"), ("e1n1", k!(1.0), "n1"), ("n1n1", k!(1.0), "n3"), ("n2n2", k!(1.0), "n3")]),
            flags: "-",
            decomposition: "",
            stratum: "S4F",
        },
        Raw {
            name: "A_4_46",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(0.5), "n1"), ("n2n2", k!(s(3.0 / 10.0)), "n3")]),
            flags: "D",
            decomposition: "A_2_2 A_2_3",
            stratum: "S4H",
        },
        Raw {
            name: "A_4_47",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(1.0), "n1"), ("n2n2", k!(s(3.0 / 5.0)), "n3")]),
            flags: "A, D",
            decomposition: "A_2_1 A_2_3",
            stratum: "S4H",
        },
        Raw {
            name: "A_4_48",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(0.5), "n1"), ("e1n2", k!(0.5), "n2"), ("n1n1", k!(s(2.0 / 5.0)), "n3")]),
            flags: "-",
            decomposition: "",
            stratum: "S4H",
        },
        Raw {
            name: "A_4_49",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(0.5), "n1"), ("e1n2", k!(0.5), "n2"), ("n1n1", k!(1.0 / s(3.0)), "n3"), ("n2n2", k!(1.0 / s(3.0)), "n3")]),
            flags: "-",
            decomposition: "",
            stratum: "S4F",
        },
        Raw {
            name: "A_4_50",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n2", k!(0.5), "n2"), ("e1n3", k!(0.5), "n3"), ("n1n2", k!(1.0 / s(3.0)), "n3")]),
            flags: "-",
            decomposition: "",
            stratum: "S4F",
        },
        Raw {
            name: "A_4_51",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(0.5), "n1"), ("e1n2", k!(1.0), "n2"), ("n1n1", k!(s(7.0 / 10.0)), "n2")]),
            flags: "D",
            decomposition: "A_3_10 T",
            stratum: "S4H",
        },
        Raw {
            name: "A_4_52",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(0.5), "n1"), ("e1n2", k!(1.0), "n2"), ("n1n1", k!(s(7.0 / 10.0)), "n3")]),
            flags: "-",
            decomposition: "",
            stratum: "S4H",
        },
        Raw {
            name: "A_4_53",
            dim: 4,
            table: Table::Alpha53,
            flags: "none",
            decomposition: "",
            stratum: "S4G",
        },
        Raw {
            name: "A_4_54",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(1.0), "n1"), ("e1n2", k!(1.0), "n2"), ("n1n1", k!(1.0), "n2")]),
            flags: "A, D",
            decomposition: "A_3_7 T",
            stratum: "S4H",
        },
        Raw {
            name: "A_4_55",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(1.0), "n1"), ("e1n2", k!(1.0), "n2"), ("e1n3", k!(0.5), "n3"), ("n3n3", k!(s(11.0 / 10.0)), "n2")]),
            flags: "-",
            decomposition: "",
            stratum: "S4H",
        },
        Raw {
            name: "A_4_56",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(1.0), "n1"), ("e1n2", k!(1.0), "n2"), ("e1n3", k!(0.5), "n3"), ("n1n1", k!(s(11.0 / 10.0)), "n2")]),
            flags: "-",
            decomposition: "",
            stratum: "S4H",
        },
        Raw {
            name: "A_4_57",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(1.0), "n1"), ("e1n2", k!(1.0), "n2"), ("e1n3", k!(0.5), "n3"), ("n1n1", k!(s(11.0 / 12.0)), "n2"), ("n3n3", k!(s(11.0 / 12.0)), "n2")]),
            flags: "-",
            decomposition: "",
            stratum: "S4F",
        },
        Raw {
            name: "A_4_58",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(1.0), "n1"), ("e1n2", k!(0.5), "n2"), ("e1n3", k!(0.5), "n3"), ("n3n3", k!(2.0 / s(5.0)), "n1")]),
            flags: "-",
            decomposition: "",
            stratum: "S4H",
        },
        Raw {
            name: "A_4_59",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(1.0), "n1"), ("e1n2", k!(0.5), "n2"), ("e1n3", k!(0.5), "n3"), ("n2n2", k!(s(2.0 / 3.0)), "n1"), ("n3n3", k!(s(2.0 / 3.0)), "n1")]),
            flags: "-",
            decomposition: "",
            stratum: "S4F",
        },
        Raw {
            name: "A_4_60",
            dim: 4,
            table: Table::Products(vec![("e1e1", k!(1.0), "e1"), ("e1n1", k!(1.0), "n1"), ("e1n2", k!(0.5), "n2"), ("e1n3", k!(0.5), "n3"), ("n1n2", k!(s(2.0 / 3.0)), "n3")]),
            flags: "-",
            decomposition: "",
            stratum: "S4F",
        },
        Raw {
            name: "A_4_61",
            dim: 4,
            table: Table::Products(vec![("n1n1", k!(1.0), "n2"), ("n2n2", k!(1.0), "n4"), ("n1n2", k!(1.0), "n3"), ("n1n3", k!(1.0), "n4")]),
            flags: "A, N",
            decomposition: "",
            stratum: "S4L",
        },
        Raw {
            name: "A_4_62",
            dim: 4,
            table: Table::Products(vec![("n1n1", k!(1.0), "n2"), ("n4n4", k!(2.0), "n2"), ("n1n2", k!(s(3.0)), "n3")]),
            flags: "N",
            decomposition: "",
            stratum: "S4J",
        },
        Raw {
            name: "A_4_63",
            dim: 4,
            table: Table::Products(vec![("n1n2", k!(1.0), "n3"), ("n1n3", k!(1.0), "n4"), ("n2n2", k!(1.0), "n4")]),
            flags: "N",
            decomposition: "",
            stratum: "S4L",
        },
        Raw {
            name: "A_4_64",
            dim: 4,
            table: Table::Products(vec![("n1n2", k!(1.0), "n3"), ("n1n3", k!(1.0), "n4")]),
            flags: "N",
            decomposition: "",
            stratum: "S4L",
        },
        Raw {
            name: "A_4_65",
            dim: 4,
            table: Table::Products(vec![("n1n1", k!(2.0 / s(3.0)), "n2"), ("n2n3", k!(1.0), "n4")]),
            flags: "N",
            decomposition: "",
            stratum: "S4K",
        },
        Raw {
            name: "A_4_66",
            dim: 4,
            table: Table::Products(vec![("n1n1", k!(1.0), "n2"), ("n3n3", k!(1.0), "n4"), ("n1n2", k!(s(3.0) / 2.0), "n4")]),
            flags: "A, N",
            decomposition: "",
            stratum: "S4M",
        },
        Raw {
            name: "A_4_67",
            dim: 4,
            table: Table::Products(vec![("n1n1", k!(1.0), "n2"), ("n1n2", k!(1.0), "n3")]),
            flags: "A, N, D",
            decomposition: "A_3_17 T",
            stratum: "S4O",
        },
        Raw {
            name: "A_4_68",
            dim: 4,
            table: Table::Products(vec![("n1n1", k!(1.0), "n2"), ("n3n3", k!(1.0), "n4")]),
            flags: "A, N, D",
            decomposition: "A_2_3 A_2_3",
            stratum: "S4P",
        },
        Raw {
            name: "A_4_69",
            dim: 4,
            table: Table::Products(vec![("n1n1", k!(1.0), "n2"), ("n1n3", k!(s(3.0 / 2.0)), "n4")]),
            flags: "A, N",
            decomposition: "",
            stratum: "S4Q",
        },
        Raw {
            name: "A_4_70",
            dim: 4,
            table: Table::Products(vec![("n1n1", k!(1.0), "n2"), ("n3n4", k!(1.0), "n2")]),
            flags: "A, N",
            decomposition: "",
            stratum: "S4N",
        },
        Raw {
            name: "A_4_71",
            dim: 4,
            table: Table::Products(vec![("n1n2", k!(1.0), "n3")]),
            flags: "A, N",
            decomposition: "A_3_18 T",
            stratum: "S4R",
        },
        Raw {
            name: "A_4_72",
            dim: 4,
            table: Table::Products(vec![("n1n1", k!(1.0), "n2")]),
            flags: "A, N",
            decomposition: "A_2_3 T T",
            stratum: "S4S",
        },
    ]
}

/// Rows of the stratification tables: key, type, beta as printed, energy.
pub(super) const STRATA: &[(&str, &str, &str, &str)] = &[
    ("S1A", "(0;1)", "-1", "1"),
    ("S2A", "(0;2)", "-1/2 -1/2", "1/2"),
    ("S2B", "(0<1;1,1)", "-1 0", "1"),
    ("S2C", "(1<2;1,1)", "-2 1", "5"),
    ("S3A", "(0;3)", "-1/3 -1/3 -1/3", "1/3"),
    ("S3B", "(0<1;2,1)", "-1/2 -1/2 0", "1/2"),
    ("S3C", "(0<1<2;1,1,1)", "-5/6 -1/3 1/6", "5/6"),
    ("S3D", "(0<1;1,2)", "-1 0 0", "1"),
    ("S3E", "(1<2<3;1,1,1)", "-4/3 -1/3 2/3", "7/3"),
    ("S3F", "(1<2;2,1)", "-1 -1 1", "3"),
    ("S3G", "(3<5<6;1,1,1)", "-2 1 0", "5"),
    ("S4A", "(0;4)", "-1/4 -1/4 -1/4 -1/4", "1/4"),
    ("S4B", "(0<1;3,1)", "-1/3 -1/3 -1/3 0", "1/3"),
    ("S4C", "(0<1<2;2,1,1)", "-5/11 -5/11 -2/11 1/11", "5/11"),
    ("S4D", "(0<1;2,2)", "-1/2 -1/2 0 0", "1/2"),
    ("S4E", "(0<1<2<3;1,1,1,1)", "-7/10 -4/10 -1/10 2/10", "7/10"),
    ("S4F", "(0<1<2;1,2,1)", "-3/4 -1/4 -1/4 1/4", "3/4"),
    ("S4G", "(0<1<2;1,1,2)", "-9/11 -4/11 1/11 1/11", "9/11"),
    ("S4H", "(0<3<5<6;1,1,1,1)", "-5/6 -1/3 0 1/6", "5/6"),
    ("S4I", "(0<1;1,3)", "-1 0 0 0", "1"),
    ("S4J", "(1<2<3;2,1,1)", "-8/11 -8/11 -1/11 6/11", "15/11"),
    ("S4K", "(3<4<6<10;1,1,1,1)", "-4/5 -3/5 -1/5 3/5", "7/5"),
    ("S4L", "(1<2<3<4;1,1,1,1)", "-1 -1/2 0 1/2", "3/2"),
    ("S4M", "(2<3<4<6;1,1,1,1)", "-1 -1/7 -4/7 5/7", "13/7"),
    ("S4N", "(1<2;3,1)", "-2/3 -2/3 -2/3 1", "7/3"),
    ("S4O", "(3<6<7<9;1,1,1,1)", "-4/3 -1/3 0 2/3", "7/3"),
    ("S4P", "(1<2;2,2)", "-1 -1 1/2 1/2", "5/2"),
    ("S4Q", "(3<4<6<7;1,1,1,1)", "-5/4 -3/4 1/4 3/4", "11/4"),
    ("S4R", "(2<3<4;2,1,1)", "-1 -1 0 1", "3"),
    ("S4S", "(3<5<6;1,2,1)", "-2 0 0 1", "5"),
];
