//! Published figures, transcribed verbatim. Abbreviated locality names are expanded.

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Sol {
    Classic,
    Refined,
}

pub struct RankingTable {
    pub number: u32,
    pub solution: Sol,
    pub hours: bool,
    pub references: usize,
    pub metric: &'static str,
    pub top: [(&'static str, f64); 5],
}

pub const RANKING_TABLES: [RankingTable; 24] = [
    RankingTable {
        number: 2,
        solution: Sol::Classic,
        hours: false,
        references: 4,
        metric: "linf",
        top: [
            ("Alcubillas", 9.14),
            ("Carrizosa", 9.48),
            ("Villanueva de los Infantes", 9.54),
            ("Fuenllana", 9.56),
            ("Alhambra", 10.08),
        ],
    },
    RankingTable {
        number: 3,
        solution: Sol::Classic,
        hours: false,
        references: 4,
        metric: "l1",
        top: [
            ("Villanueva de los Infantes", 16.77),
            ("Carrizosa", 19.41),
            ("Alcubillas", 27.05),
            ("Fuenllana", 28.27),
            ("Cózar", 32.39),
        ],
    },
    RankingTable {
        number: 4,
        solution: Sol::Classic,
        hours: false,
        references: 4,
        metric: "l2",
        top: [
            ("Villanueva de los Infantes", 10.67),
            ("Carrizosa", 12.75),
            ("Alcubillas", 13.85),
            ("Fuenllana", 15.16),
            ("Alhambra", 18.59),
        ],
    },
    RankingTable {
        number: 6,
        solution: Sol::Classic,
        hours: true,
        references: 4,
        metric: "linf",
        top: [
            ("Alcubillas", 2.95),
            ("Carrizosa", 3.06),
            ("Villanueva de los Infantes", 3.08),
            ("Fuenllana", 3.08),
            ("Alhambra", 3.25),
        ],
    },
    RankingTable {
        number: 7,
        solution: Sol::Classic,
        hours: true,
        references: 4,
        metric: "l1",
        top: [
            ("Villanueva de los Infantes", 5.41),
            ("Carrizosa", 6.26),
            ("Alcubillas", 8.72),
            ("Fuenllana", 9.11),
            ("Cózar", 10.45),
        ],
    },
    RankingTable {
        number: 8,
        solution: Sol::Classic,
        hours: true,
        references: 4,
        metric: "l2",
        top: [
            ("Villanueva de los Infantes", 3.45),
            ("Carrizosa", 4.11),
            ("Alcubillas", 4.47),
            ("Fuenllana", 4.89),
            ("Alhambra", 5.99),
        ],
    },
    RankingTable {
        number: 9,
        solution: Sol::Classic,
        hours: false,
        references: 3,
        metric: "linf",
        top: [
            ("Carrizosa", 8.44),
            ("Alcubillas", 9.14),
            ("Villanueva de los Infantes", 9.54),
            ("Fuenllana", 9.56),
            ("Alhambra", 10.08),
        ],
    },
    RankingTable {
        number: 10,
        solution: Sol::Classic,
        hours: false,
        references: 3,
        metric: "l1",
        top: [
            ("Carrizosa", 9.93),
            ("Villanueva de los Infantes", 15.77),
            ("Fuenllana", 21.95),
            ("Alcubillas", 21.97),
            ("Cózar", 26.95),
        ],
    },
    RankingTable {
        number: 11,
        solution: Sol::Classic,
        hours: false,
        references: 3,
        metric: "l2",
        top: [
            ("Carrizosa", 8.53),
            ("Villanueva de los Infantes", 10.63),
            ("Alcubillas", 12.88),
            ("Fuenllana", 13.78),
            ("Alhambra", 16.36),
        ],
    },
    RankingTable {
        number: 12,
        solution: Sol::Classic,
        hours: true,
        references: 3,
        metric: "linf",
        top: [
            ("Carrizosa", 2.72),
            ("Alcubillas", 2.95),
            ("Villanueva de los Infantes", 3.08),
            ("Fuenllana", 3.08),
            ("Alhambra", 3.25),
        ],
    },
    RankingTable {
        number: 13,
        solution: Sol::Classic,
        hours: true,
        references: 3,
        metric: "l1",
        top: [
            ("Carrizosa", 3.20),
            ("Villanueva de los Infantes", 5.09),
            ("Fuenllana", 7.07),
            ("Alcubillas", 7.08),
            ("Cózar", 8.70),
        ],
    },
    RankingTable {
        number: 14,
        solution: Sol::Classic,
        hours: true,
        references: 3,
        metric: "l2",
        top: [
            ("Carrizosa", 2.75),
            ("Villanueva de los Infantes", 3.43),
            ("Alcubillas", 4.15),
            ("Fuenllana", 4.44),
            ("Alhambra", 5.27),
        ],
    },
    RankingTable {
        number: 15,
        solution: Sol::Refined,
        hours: false,
        references: 4,
        metric: "linf",
        top: [
            ("Villanueva de los Infantes", 8.13),
            ("Alcubillas", 8.26),
            ("Cózar", 8.92),
            ("Montiel", 12.41),
            ("Almedina", 12.60),
        ],
    },
    RankingTable {
        number: 16,
        solution: Sol::Refined,
        hours: false,
        references: 4,
        metric: "l1",
        top: [
            ("Villanueva de los Infantes", 16.15),
            ("Alcubillas", 16.59),
            ("Cózar", 17.79),
            ("Fuenllana", 24.55),
            ("Almedina", 28.43),
        ],
    },
    RankingTable {
        number: 17,
        solution: Sol::Refined,
        hours: false,
        references: 4,
        metric: "l2",
        top: [
            ("Villanueva de los Infantes", 9.83),
            ("Cózar", 10.48),
            ("Alcubillas", 10.48),
            ("Almedina", 16.26),
            ("Fuenllana", 16.56),
        ],
    },
    RankingTable {
        number: 18,
        solution: Sol::Refined,
        hours: true,
        references: 4,
        metric: "linf",
        top: [
            ("Villanueva de los Infantes", 2.62),
            ("Alcubillas", 2.66),
            ("Cózar", 2.88),
            ("Montiel", 4.00),
            ("Almedina", 4.06),
        ],
    },
    RankingTable {
        number: 19,
        solution: Sol::Refined,
        hours: true,
        references: 4,
        metric: "l1",
        top: [
            ("Villanueva de los Infantes", 5.21),
            ("Alcubillas", 5.34),
            ("Cózar", 5.75),
            ("Fuenllana", 7.91),
            ("Almedina", 9.17),
        ],
    },
    RankingTable {
        number: 20,
        solution: Sol::Refined,
        hours: true,
        references: 4,
        metric: "l2",
        top: [
            ("Villanueva de los Infantes", 3.17),
            ("Alcubillas", 3.38),
            ("Cózar", 3.38),
            ("Almedina", 5.24),
            ("Fuenllana", 5.34),
        ],
    },
    RankingTable {
        number: 21,
        solution: Sol::Refined,
        hours: false,
        references: 3,
        metric: "linf",
        top: [
            ("Villanueva de los Infantes", 4.24),
            ("Alcubillas", 8.26),
            ("Torres de Montiel", 8.88),
            ("Cózar", 8.92),
            ("Fuenllana", 9.56),
        ],
    },
    RankingTable {
        number: 22,
        solution: Sol::Refined,
        hours: false,
        references: 3,
        metric: "l1",
        top: [
            ("Villanueva de los Infantes", 8.02),
            ("Fuenllana", 11.10),
            ("Alcubillas", 14.54),
            ("Cózar", 16.10),
            ("Torres de Montiel", 18.54),
        ],
    },
    RankingTable {
        number: 23,
        solution: Sol::Refined,
        hours: false,
        references: 3,
        metric: "l2",
        top: [
            ("Villanueva de los Infantes", 5.53),
            ("Fuenllana", 9.66),
            ("Alcubillas", 10.28),
            ("Cózar", 10.34),
            ("Torres de Montiel", 11.22),
        ],
    },
    RankingTable {
        number: 24,
        solution: Sol::Refined,
        hours: true,
        references: 3,
        metric: "linf",
        top: [
            ("Villanueva de los Infantes", 1.37),
            ("Alcubillas", 2.66),
            ("Torres de Montiel", 2.86),
            ("Cózar", 2.88),
            ("Fuenllana", 3.08),
        ],
    },
    RankingTable {
        number: 25,
        solution: Sol::Refined,
        hours: true,
        references: 3,
        metric: "l1",
        top: [
            ("Villanueva de los Infantes", 2.59),
            ("Fuenllana", 3.57),
            ("Alcubillas", 4.68),
            ("Cózar", 5.20),
            ("Torres de Montiel", 5.98),
        ],
    },
    RankingTable {
        number: 26,
        solution: Sol::Refined,
        hours: true,
        references: 3,
        metric: "l2",
        top: [
            ("Villanueva de los Infantes", 1.78),
            ("Fuenllana", 3.11),
            ("Alcubillas", 3.31),
            ("Cózar", 3.34),
            ("Torres de Montiel", 3.62),
        ],
    },
];

/// (family, metric, three nearest localities with relative error in percent)
pub type ErrorRow = (&'static str, &'static str, [(&'static str, f64); 3]);

pub const RELATIVE_ERRORS: [ErrorRow; 24] = [
    (
        "classic/km/4",
        "linf",
        [
            ("Alcubillas", 11.79),
            ("Carrizosa", 12.23),
            ("Villanueva de los Infantes", 12.31),
        ],
    ),
    (
        "classic/km/4",
        "l1",
        [
            ("Villanueva de los Infantes", 6.10),
            ("Carrizosa", 7.06),
            ("Alcubillas", 9.84),
        ],
    ),
    (
        "classic/km/4",
        "l2",
        [
            ("Villanueva de los Infantes", 7.72),
            ("Carrizosa", 9.23),
            ("Alcubillas", 10.02),
        ],
    ),
    (
        "classic/hours/4",
        "linf",
        [
            ("Alcubillas", 11.80),
            ("Carrizosa", 12.24),
            ("Villanueva de los Infantes", 12.32),
        ],
    ),
    (
        "classic/hours/4",
        "l1",
        [
            ("Villanueva de los Infantes", 6.10),
            ("Carrizosa", 7.06),
            ("Alcubillas", 9.83),
        ],
    ),
    (
        "classic/hours/4",
        "l2",
        [
            ("Villanueva de los Infantes", 7.74),
            ("Carrizosa", 9.22),
            ("Alcubillas", 10.03),
        ],
    ),
    (
        "classic/km/3",
        "linf",
        [
            ("Carrizosa", 10.89),
            ("Alcubillas", 11.79),
            ("Villanueva de los Infantes", 12.31),
        ],
    ),
    (
        "classic/km/3",
        "l1",
        [
            ("Carrizosa", 4.66),
            ("Alcubillas", 7.40),
            ("Villanueva de los Infantes", 10.31),
        ],
    ),
    (
        "classic/km/3",
        "l2",
        [
            ("Carrizosa", 6.91),
            ("Villanueva de los Infantes", 8.61),
            ("Alcubillas", 10.43),
        ],
    ),
    (
        "classic/hours/3",
        "linf",
        [
            ("Carrizosa", 10.88),
            ("Alcubillas", 11.80),
            ("Villanueva de los Infantes", 12.32),
        ],
    ),
    (
        "classic/hours/3",
        "l1",
        [
            ("Carrizosa", 4.66),
            ("Villanueva de los Infantes", 7.41),
            ("Fuenllana", 10.29),
        ],
    ),
    (
        "classic/hours/3",
        "l2",
        [
            ("Carrizosa", 6.90),
            ("Villanueva de los Infantes", 8.61),
            ("Alcubillas", 10.42),
        ],
    ),
    (
        "refined/km/4",
        "linf",
        [
            ("Villanueva de los Infantes", 9.37),
            ("Alcubillas", 9.52),
            ("Cózar", 10.28),
        ],
    ),
    (
        "refined/km/4",
        "l1",
        [
            ("Villanueva de los Infantes", 5.51),
            ("Alcubillas", 5.66),
            ("Cózar", 6.07),
        ],
    ),
    (
        "refined/km/4",
        "l2",
        [
            ("Villanueva de los Infantes", 6.66),
            ("Cózar", 7.10),
            ("Alcubillas", 7.10),
        ],
    ),
    (
        "refined/hours/4",
        "linf",
        [
            ("Villanueva de los Infantes", 9.36),
            ("Alcubillas", 9.50),
            ("Cózar", 10.29),
        ],
    ),
    (
        "refined/hours/4",
        "l1",
        [
            ("Villanueva de los Infantes", 5.51),
            ("Alcubillas", 5.65),
            ("Cózar", 6.08),
        ],
    ),
    (
        "refined/hours/4",
        "l2",
        [
            ("Villanueva de los Infantes", 6.66),
            ("Alcubillas", 7.10),
            ("Cózar", 7.10),
        ],
    ),
    (
        "refined/km/3",
        "linf",
        [
            ("Villanueva de los Infantes", 4.88),
            ("Alcubillas", 9.52),
            ("Torres de Montiel", 10.23),
        ],
    ),
    (
        "refined/km/3",
        "l1",
        [
            ("Villanueva de los Infantes", 3.58),
            ("Fuenllana", 4.96),
            ("Alcubillas", 6.50),
        ],
    ),
    (
        "refined/km/3",
        "l2",
        [
            ("Villanueva de los Infantes", 4.24),
            ("Fuenllana", 7.41),
            ("Alcubillas", 7.88),
        ],
    ),
    (
        "refined/hours/3",
        "linf",
        [
            ("Villanueva de los Infantes", 4.89),
            ("Alcubillas", 9.50),
            ("Torres de Montiel", 10.21),
        ],
    ),
    (
        "refined/hours/3",
        "l1",
        [
            ("Villanueva de los Infantes", 3.59),
            ("Fuenllana", 4.94),
            ("Alcubillas", 6.48),
        ],
    ),
    (
        "refined/hours/3",
        "l2",
        [
            ("Villanueva de los Infantes", 4.23),
            ("Fuenllana", 7.39),
            ("Alcubillas", 7.87),
        ],
    ),
];

/// (family, [gap L-inf, gap L1, gap L2], mean)
pub const GAPS: [(&str, [f64; 3], f64); 8] = [
    ("classic/km/4", [0.44, 0.96, 1.51], 0.97),
    ("classic/hours/4", [0.44, 0.96, 1.48], 0.96),
    ("classic/km/3", [0.90, 2.74, 1.70], 1.78),
    ("classic/hours/3", [0.92, 2.75, 1.71], 1.79),
    ("refined/km/4", [0.15, 0.15, 0.44], 0.25),
    ("refined/hours/4", [0.14, 0.14, 0.44], 0.24),
    ("refined/km/3", [4.63, 1.38, 3.17], 3.06),
    ("refined/hours/3", [4.61, 1.36, 3.16], 3.04),
];

/// Splits a family key such as `refined/km/3` into (solution, hours?, reference count).
pub fn family(key: &str) -> (Sol, bool, usize) {
    let mut parts = key.split('/');
    let solution = match parts.next() {
        Some("classic") => Sol::Classic,
        Some("refined") => Sol::Refined,
        _ => panic!("bad family key {key}"),
    };
    let hours = parts.next() == Some("hours");
    let references = parts
        .next()
        .and_then(|r| r.parse().ok())
        .expect("reference count");
    (solution, hours, references)
}
