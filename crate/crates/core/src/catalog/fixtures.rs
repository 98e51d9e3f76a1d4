pub(crate) const AR_GR25_NODES: &[(u32, &str)] = &[
    (0, "12"),
    (1, "13"),
    (2, "14"),
    (3, "15"),
    (2, "23"),
    (3, "24"),
    (4, "25"),
    (5, "21"),
    (4, "34"),
    (5, "35"),
    (6, "31"),
    (6, "45"),
    (7, "41"),
    (8, "51"),
];

pub(crate) const AR_GR25_ARROWS: &[(&str, &str)] = &[
    ("12", "13"),
    ("13", "14"),
    ("14", "15"),
    ("23", "24"),
    ("24", "25"),
    ("25", "21"),
    ("34", "35"),
    ("35", "31"),
    ("13", "23"),
    ("14", "24"),
    ("24", "34"),
    ("15", "25"),
    ("25", "35"),
    ("35", "45"),
    ("21", "31"),
    ("45", "41"),
    ("31", "41"),
    ("41", "51"),
];

pub(crate) const AR_GR36_NODES: &[(u32, &str)] = &[
    (0, "135|246"),
    (1, "125"),
    (1, "134"),
    (1, "356"),
    (2, "126"),
    (2, "135"),
    (2, "234"),
    (2, "456"),
    (3, "136"),
    (3, "235"),
    (3, "145"),
    (4, "246|135"),
    (5, "245"),
    (5, "146"),
    (5, "236"),
    (6, "345"),
    (6, "246"),
    (6, "156"),
    (6, "123"),
    (7, "346"),
    (7, "256"),
    (7, "124"),
    (8, "135|246"),
    (9, "125"),
    (9, "134"),
    (9, "356"),
];

pub(crate) const AR_GR36_ARROWS: &[(&str, &str)] = &[
    ("135|246", "125"),
    ("135|246", "134"),
    ("135|246", "356"),
    ("125", "126"),
    ("125", "135"),
    ("134", "135"),
    ("134", "234"),
    ("356", "135"),
    ("356", "456"),
    ("126", "136"),
    ("135", "136"),
    ("135", "235"),
    ("234", "235"),
    ("135", "145"),
    ("456", "145"),
    ("136", "246|135"),
    ("235", "246|135"),
    ("145", "246|135"),
    ("246|135", "245"),
    ("246|135", "146"),
    ("246|135", "236"),
    ("245", "345"),
    ("245", "246"),
    ("146", "246"),
    ("146", "156"),
    ("236", "246"),
    ("236", "123"),
    ("345", "346"),
    ("246", "346"),
    ("246", "256"),
    ("156", "256"),
    ("246", "124"),
    ("123", "124"),
    ("346", "135|246"),
    ("256", "135|246"),
    ("124", "135|246"),
    ("135|246", "125"),
    ("135|246", "134"),
    ("135|246", "356"),
];

pub(crate) const AR_GR37_NODES: &[(u32, &str)] = &[
    (0, "356"),
    (0, "135|247"),
    (0, "267"),
    (1, "456"),
    (1, "357"),
    (1, "125"),
    (1, "136|247"),
    (2, "457"),
    (2, "136|257"),
    (2, "134"),
    (3, "146|257"),
    (3, "367"),
    (3, "135"),
    (3, "234"),
    (4, "126"),
    (4, "146|357"),
    (4, "235"),
    (5, "127"),
    (5, "136"),
    (5, "145"),
    (5, "246|357"),
    (6, "137"),
    (6, "246|135"),
    (6, "467"),
    (7, "247|135"),
    (7, "236"),
    (7, "146"),
    (7, "567"),
    (8, "245"),
    (8, "247|136"),
    (8, "156"),
    (9, "345"),
    (9, "246"),
    (9, "147"),
    (9, "257|136"),
];

pub(crate) const AR_GR37_ARROWS: &[(&str, &str)] = &[
    ("356", "456"),
    ("356", "357"),
    ("135|247", "357"),
    ("135|247", "125"),
    ("135|247", "136|247"),
    ("267", "136|247"),
    ("456", "457"),
    ("357", "457"),
    ("357", "136|257"),
    ("125", "136|257"),
    ("136|247", "136|257"),
    ("136|247", "134"),
    ("457", "146|257"),
    ("136|257", "146|257"),
    ("136|257", "367"),
    ("136|257", "135"),
    ("134", "135"),
    ("134", "234"),
    ("146|257", "126"),
    ("146|257", "146|357"),
    ("367", "146|357"),
    ("135", "146|357"),
    ("135", "235"),
    ("234", "235"),
    ("126", "127"),
    ("126", "136"),
    ("146|357", "136"),
    ("146|357", "145"),
    ("146|357", "246|357"),
    ("235", "246|357"),
    ("127", "137"),
    ("136", "137"),
    ("136", "246|135"),
    ("145", "246|135"),
    ("246|357", "246|135"),
    ("246|357", "467"),
    ("137", "247|135"),
    ("246|135", "247|135"),
    ("246|135", "236"),
    ("246|135", "146"),
    ("467", "146"),
    ("467", "567"),
    ("247|135", "245"),
    ("247|135", "247|136"),
    ("236", "247|136"),
    ("146", "247|136"),
    ("146", "156"),
    ("567", "156"),
    ("245", "345"),
    ("245", "246"),
    ("247|136", "246"),
    ("247|136", "147"),
    ("247|136", "257|136"),
    ("156", "257|136"),
];

pub(crate) const AR_GR38_NODES: &[(u32, &str)] = &[
    (0, "138"),
    (0, "247|135"),
    (0, "257|146|368"),
    (0, "478"),
    (1, "248|135"),
    (1, "247|136"),
    (1, "257|368"),
    (1, "157|468"),
    (2, "245"),
    (2, "248|136"),
    (2, "257|147|368"),
    (2, "156"),
    (3, "345"),
    (3, "246"),
    (3, "258|147|368"),
    (3, "147"),
    (3, "257|136"),
    (4, "346"),
    (4, "257|468"),
    (4, "258|147|136"),
    (4, "237"),
    (5, "357|468"),
    (5, "257|146"),
    (5, "258|136"),
    (5, "248|137"),
    (6, "578"),
    (6, "357|146"),
    (6, "258|247|136"),
    (6, "148"),
    (7, "678"),
    (7, "157"),
    (7, "358|247|136"),
    (7, "247"),
    (7, "258|146"),
    (8, "167"),
    (8, "258|137"),
    (8, "358|247|146"),
    (8, "256"),
    (9, "268|137"),
    (9, "258|147"),
    (9, "358|146"),
    (9, "357|246"),
];

pub(crate) const AR_GR38_ARROWS: &[(&str, &str)] = &[
    ("138", "248|135"),
    ("247|135", "248|135"),
    ("247|135", "247|136"),
    ("257|146|368", "247|136"),
    ("257|146|368", "257|368"),
    ("257|146|368", "157|468"),
    ("478", "157|468"),
    ("248|135", "245"),
    ("248|135", "248|136"),
    ("247|136", "248|136"),
    ("247|136", "257|147|368"),
    ("257|368", "257|147|368"),
    ("157|468", "257|147|368"),
    ("157|468", "156"),
    ("245", "345"),
    ("245", "246"),
    ("248|136", "246"),
    ("248|136", "258|147|368"),
    ("257|147|368", "258|147|368"),
    ("257|147|368", "147"),
    ("257|147|368", "257|136"),
    ("156", "257|136"),
    ("345", "346"),
    ("246", "346"),
    ("246", "257|468"),
    ("258|147|368", "257|468"),
    ("258|147|368", "258|147|136"),
    ("147", "258|147|136"),
    ("257|136", "258|147|136"),
    ("257|136", "237"),
    ("346", "357|468"),
    ("257|468", "357|468"),
    ("257|468", "257|146"),
    ("258|147|136", "257|146"),
    ("258|147|136", "258|136"),
    ("258|147|136", "248|137"),
    ("237", "248|137"),
    ("357|468", "578"),
    ("357|468", "357|146"),
    ("257|146", "357|146"),
    ("257|146", "258|247|136"),
    ("258|136", "258|247|136"),
    ("248|137", "258|247|136"),
    ("248|137", "148"),
    ("578", "678"),
    ("578", "157"),
    ("357|146", "157"),
    ("357|146", "358|247|136"),
    ("258|247|136", "358|247|136"),
    ("258|247|136", "247"),
    ("258|247|136", "258|146"),
    ("148", "258|146"),
    ("678", "167"),
    ("157", "167"),
    ("157", "258|137"),
    ("358|247|136", "258|137"),
    ("358|247|136", "358|247|146"),
    ("247", "358|247|146"),
    ("258|146", "358|247|146"),
    ("258|146", "256"),
    ("167", "268|137"),
    ("258|137", "268|137"),
    ("258|137", "258|147"),
    ("358|247|146", "258|147"),
    ("358|247|146", "358|146"),
    ("358|247|146", "357|246"),
    ("256", "357|246"),
];

/// Cells `(x, y, dim)` of a window figure, with the figure's origin shift.
pub(crate) struct FigureCells {
    pub k: usize,
    pub n: usize,
    /// Lattice vertex is `(x - dx, y - dy)`.
    pub dx: i64,
    pub dy: i64,
    pub cells: &'static [(i64, i64, u32)],
}

impl FigureCells {
    pub fn lattice_points(&self) -> Vec<(i64, i64, u32)> {
        self.cells
            .iter()
            .map(|&(x, y, v)| (x - self.dx, y - self.dy, v))
            .collect()
    }
}

pub(crate) const FIG_CONTOURS: FigureCells = FigureCells {
    k: 3,
    n: 8,
    dx: 1,
    dy: 1,
    cells: &[
        (3, 4, 1),
        (6, 5, 1),
        (7, 6, 1),
        (1, 2, 3),
        (4, 1, 3),
        (9, 4, 3),
        (0, 3, 2),
        (1, 4, 2),
        (2, 3, 2),
        (3, 2, 2),
        (4, 3, 2),
        (5, 2, 2),
        (5, 4, 2),
        (6, 3, 2),
        (7, 4, 2),
        (8, 5, 2),
        (9, 6, 2),
        (0, 1, 4),
        (1, 0, 4),
        (2, 1, 4),
        (3, 0, 4),
        (4, -1, 4),
        (5, 0, 4),
        (6, 1, 4),
        (7, 2, 4),
        (8, 3, 4),
        (9, 2, 4),
    ],
};

pub(crate) const FIG_CONTOURS_PROFILE: &str = "137|125|124|238";
pub(crate) const FIG_CONTOURS_PINCH: [&str; 2] = ["137|125", "124|238"];

pub(crate) const FIG_3CONTOURS: [FigureCells; 3] = [
    FigureCells {
        k: 3,
        n: 8,
        dx: 1,
        dy: 1,
        cells: &[
            (0, 1, 3),
            (1, 2, 3),
            (2, 1, 3),
            (3, 2, 3),
            (4, 3, 3),
            (5, 2, 3),
            (6, 3, 3),
            (7, 4, 3),
            (8, 3, 3),
            (9, 4, 3),
            (0, 3, 2),
            (8, 5, 2),
            (2, 3, 2),
            (3, 4, 1),
            (5, 4, 2),
            (6, 5, 1),
        ],
    },
    FigureCells {
        k: 3,
        n: 8,
        dx: 1,
        dy: 1,
        cells: &[
            (0, 1, 3),
            (1, 0, 3),
            (2, 1, 3),
            (3, 0, 3),
            (4, 1, 3),
            (5, 2, 3),
            (6, 1, 3),
            (7, 2, 3),
            (8, 3, 3),
            (9, 2, 3),
            (1, 2, 1),
            (3, 2, 2),
            (4, 3, 1),
            (6, 3, 2),
            (7, 4, 1),
            (9, 4, 1),
        ],
    },
    FigureCells {
        k: 3,
        n: 8,
        dx: 1,
        dy: 1,
        cells: &[
            (0, 1, 3),
            (1, 0, 3),
            (2, 1, 3),
            (3, 2, 3),
            (4, 1, 3),
            (5, 2, 3),
            (6, 3, 3),
            (7, 2, 3),
            (8, 3, 3),
            (9, 2, 3),
            (0, 3, 1),
            (1, 2, 2),
            (2, 3, 1),
            (4, 3, 2),
            (5, 4, 1),
            (7, 4, 2),
            (8, 5, 1),
            (9, 4, 2),
        ],
    },
];

/// The three stacks with the label 8 occurring twice, top layer first.
pub(crate) const TWO_EIGHTS: [&str; 3] = ["147|368|258", "368|258|147", "258|147|368"];

pub(crate) const FIG_COUNTEREXAMPLE: FigureCells = FigureCells {
    k: 4,
    n: 8,
    dx: 0,
    dy: 0,
    cells: &[
        (-1, 0, 2),
        (0, 1, 2),
        (1, 0, 2),
        (2, 1, 2),
        (3, 0, 2),
        (4, -1, 2),
        (5, 0, 2),
        (6, 1, 2),
        (7, 0, 2),
        (8, 1, 2),
        (-1, 2, 1),
        (1, 2, 1),
        (3, 2, 1),
        (4, 3, 1),
        (4, 1, 1),
        (5, 2, 1),
        (7, 2, 1),
    ],
};

pub(crate) const COUNTEREXAMPLE_PROFILE: &str = "2568|1347";

/// The almost-split sequence `236 -> 246 + 123 -> 124` in `Gr(3,6)`.
pub(crate) const ASS_GR36: (&str, [&str; 2], &str) = ("236", ["246", "123"], "124");

/// Labels in the Gr(3,7) and Gr(3,8) figures continue by adding this to every label.
pub(crate) const AR_WINDOW_SHIFT: i64 = 3;
