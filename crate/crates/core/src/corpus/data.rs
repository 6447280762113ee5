//! Ball centres and listed contacts of the eight reference configurations,
//! transcribed table by table.

use super::RawEntry;

pub(super) const ENTRIES: [RawEntry; 8] = [
    RawEntry {
        n: 20,
        claimed_total: 64,
        printed_total: "64",
        centers: &[
            [2, 0, 0],
            [1, 1, 0],
            [2, 1, 0],
            [0, 2, 0],
            [1, 2, 0],
            [2, 2, 0],
            [1, 0, 1],
            [2, 0, 1],
            [0, 1, 1],
            [1, 1, 1],
            [2, 1, 1],
            [0, 2, 1],
            [1, 2, 1],
            [2, 2, 1],
            [2, 0, 2],
            [1, 1, 2],
            [2, 1, 2],
            [0, 2, 2],
            [1, 2, 2],
            [2, 2, 2],
        ],
        contacts: &[
            (1, 2),
            (1, 3),
            (1, 7),
            (1, 8),
            (2, 3),
            (2, 4),
            (2, 5),
            (2, 7),
            (2, 9),
            (2, 10),
            (3, 5),
            (3, 6),
            (3, 8),
            (3, 10),
            (3, 11),
            (4, 5),
            (4, 9),
            (4, 12),
            (5, 6),
            (5, 10),
            (5, 12),
            (5, 13),
            (6, 11),
            (6, 13),
            (6, 14),
            (7, 8),
            (7, 9),
            (7, 10),
            (7, 15),
            (7, 16),
            (8, 10),
            (8, 11),
            (8, 15),
            (8, 17),
            (9, 10),
            (9, 12),
            (9, 16),
            (9, 18),
            (10, 11),
            (10, 12),
            (10, 13),
            (10, 16),
            (10, 17),
            (10, 19),
            (11, 13),
            (11, 14),
            (11, 17),
            (11, 20),
            (12, 13),
            (12, 18),
            (12, 19),
            (13, 14),
            (13, 19),
            (13, 20),
            (14, 20),
            (15, 16),
            (15, 17),
            (16, 17),
            (16, 18),
            (16, 19),
            (17, 19),
            (17, 20),
            (18, 19),
            (19, 20),
        ],
    },
    RawEntry {
        n: 21,
        claimed_total: 67,
        printed_total: "67",
        centers: &[
            [1, 0, 0],
            [2, 0, 0],
            [0, 1, 0],
            [1, 1, 0],
            [2, 1, 0],
            [0, 2, 0],
            [1, 2, 0],
            [2, 2, 0],
            [0, 0, 1],
            [1, 0, 1],
            [2, 0, 1],
            [0, 1, 1],
            [1, 1, 1],
            [2, 1, 1],
            [0, 2, 1],
            [1, 2, 1],
            [2, 2, 1],
            [1, 1, 2],
            [2, 1, 2],
            [1, 2, 2],
            [2, 2, 2],
        ],
        contacts: &[
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 9),
            (1, 10),
            (2, 4),
            (2, 5),
            (2, 10),
            (2, 11),
            (3, 4),
            (3, 6),
            (3, 9),
            (3, 12),
            (4, 5),
            (4, 6),
            (4, 7),
            (4, 10),
            (4, 12),
            (4, 13),
            (5, 7),
            (5, 8),
            (5, 11),
            (5, 13),
            (5, 14),
            (6, 7),
            (6, 12),
            (6, 15),
            (7, 8),
            (7, 13),
            (7, 15),
            (7, 16),
            (8, 14),
            (8, 16),
            (8, 17),
            (9, 10),
            (9, 12),
            (10, 11),
            (10, 12),
            (10, 13),
            (10, 18),
            (11, 13),
            (11, 14),
            (11, 19),
            (12, 13),
            (12, 15),
            (12, 18),
            (13, 14),
            (13, 15),
            (13, 16),
            (13, 18),
            (13, 19),
            (13, 20),
            (14, 16),
            (14, 17),
            (14, 19),
            (14, 21),
            (15, 16),
            (15, 20),
            (16, 17),
            (16, 20),
            (16, 21),
            (17, 21),
            (18, 19),
            (18, 20),
            (19, 20),
            (19, 21),
            (20, 21),
        ],
    },
    RawEntry {
        n: 22,
        claimed_total: 72,
        printed_total: "72",
        centers: &[
            [1, 0, 0],
            [2, 0, 0],
            [0, 1, 0],
            [1, 1, 0],
            [2, 1, 0],
            [0, 2, 0],
            [1, 2, 0],
            [0, 0, 1],
            [1, 0, 1],
            [2, 0, 1],
            [0, 1, 1],
            [1, 1, 1],
            [2, 1, 1],
            [0, 2, 1],
            [1, 2, 1],
            [1, 0, 2],
            [2, 0, 2],
            [0, 1, 2],
            [1, 1, 2],
            [2, 1, 2],
            [0, 2, 2],
            [1, 2, 2],
        ],
        contacts: &[
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 8),
            (1, 9),
            (2, 4),
            (2, 5),
            (2, 9),
            (2, 10),
            (3, 4),
            (3, 6),
            (3, 8),
            (3, 11),
            (4, 5),
            (4, 6),
            (4, 7),
            (4, 9),
            (4, 11),
            (4, 12),
            (5, 7),
            (5, 10),
            (5, 12),
            (5, 13),
            (6, 7),
            (6, 11),
            (6, 14),
            (7, 12),
            (7, 14),
            (7, 15),
            (8, 9),
            (8, 11),
            (8, 16),
            (8, 18),
            (9, 10),
            (9, 11),
            (9, 12),
            (9, 16),
            (9, 17),
            (9, 19),
            (10, 12),
            (10, 13),
            (10, 17),
            (10, 20),
            (11, 12),
            (11, 14),
            (11, 18),
            (11, 19),
            (11, 21),
            (12, 13),
            (12, 14),
            (12, 15),
            (12, 19),
            (12, 20),
            (12, 22),
            (13, 15),
            (13, 20),
            (14, 15),
            (14, 21),
            (14, 22),
            (15, 22),
            (16, 17),
            (16, 18),
            (16, 19),
            (17, 19),
            (17, 20),
            (18, 19),
            (18, 21),
            (19, 20),
            (19, 21),
            (19, 22),
            (20, 22),
            (21, 22),
        ],
    },
    RawEntry {
        n: 23,
        claimed_total: 76,
        printed_total: "76",
        centers: &[
            [1, 0, 0],
            [2, 0, 0],
            [0, 1, 0],
            [1, 1, 0],
            [2, 1, 0],
            [0, 2, 0],
            [1, 2, 0],
            [2, 2, 0],
            [0, 0, 1],
            [1, 0, 1],
            [2, 0, 1],
            [0, 1, 1],
            [1, 1, 1],
            [2, 1, 1],
            [0, 2, 1],
            [1, 2, 1],
            [1, 0, 2],
            [2, 0, 2],
            [0, 1, 2],
            [1, 1, 2],
            [2, 1, 2],
            [0, 2, 2],
            [1, 2, 2],
        ],
        contacts: &[
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 9),
            (1, 10),
            (2, 4),
            (2, 5),
            (2, 10),
            (2, 11),
            (3, 4),
            (3, 6),
            (3, 9),
            (3, 12),
            (4, 5),
            (4, 6),
            (4, 7),
            (4, 10),
            (4, 12),
            (4, 13),
            (5, 7),
            (5, 8),
            (5, 11),
            (5, 13),
            (5, 14),
            (6, 7),
            (6, 12),
            (6, 15),
            (7, 8),
            (7, 13),
            (7, 15),
            (7, 16),
            (8, 14),
            (8, 16),
            (9, 10),
            (9, 12),
            (9, 17),
            (9, 19),
            (10, 11),
            (10, 12),
            (10, 13),
            (10, 17),
            (10, 18),
            (10, 20),
            (11, 13),
            (11, 14),
            (11, 18),
            (11, 21),
            (12, 13),
            (12, 15),
            (12, 19),
            (12, 20),
            (12, 22),
            (13, 14),
            (13, 15),
            (13, 16),
            (13, 20),
            (13, 21),
            (13, 23),
            (14, 16),
            (14, 21),
            (15, 16),
            (15, 22),
            (15, 23),
            (16, 23),
            (17, 18),
            (17, 19),
            (17, 20),
            (18, 20),
            (18, 21),
            (19, 20),
            (19, 22),
            (20, 21),
            (20, 22),
            (20, 23),
            (21, 23),
            (22, 23),
        ],
    },
    RawEntry {
        n: 24,
        claimed_total: 80,
        printed_total: "y",
        centers: &[
            [1, 0, 0],
            [2, 0, 0],
            [0, 1, 0],
            [1, 1, 0],
            [2, 1, 0],
            [0, 2, 0],
            [1, 2, 0],
            [2, 2, 0],
            [0, 0, 1],
            [1, 0, 1],
            [2, 0, 1],
            [0, 1, 1],
            [1, 1, 1],
            [2, 1, 1],
            [0, 2, 1],
            [1, 2, 1],
            [1, 0, 2],
            [2, 0, 2],
            [0, 1, 2],
            [1, 1, 2],
            [2, 1, 2],
            [0, 2, 2],
            [1, 2, 2],
            [2, 2, 2],
        ],
        contacts: &[
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 9),
            (1, 10),
            (2, 4),
            (2, 5),
            (2, 10),
            (2, 11),
            (3, 4),
            (3, 6),
            (3, 9),
            (3, 12),
            (4, 5),
            (4, 6),
            (4, 7),
            (4, 10),
            (4, 12),
            (4, 13),
            (5, 7),
            (5, 8),
            (5, 11),
            (5, 13),
            (5, 14),
            (6, 7),
            (6, 12),
            (6, 15),
            (7, 8),
            (7, 13),
            (7, 15),
            (7, 16),
            (8, 14),
            (8, 16),
            (9, 10),
            (9, 12),
            (9, 17),
            (9, 19),
            (10, 11),
            (10, 12),
            (10, 13),
            (10, 17),
            (10, 18),
            (10, 20),
            (11, 13),
            (11, 14),
            (11, 18),
            (11, 21),
            (12, 13),
            (12, 15),
            (12, 19),
            (12, 20),
            (12, 22),
            (13, 14),
            (13, 15),
            (13, 16),
            (13, 20),
            (13, 21),
            (13, 23),
            (14, 16),
            (14, 21),
            (14, 24),
            (15, 16),
            (15, 22),
            (15, 23),
            (16, 23),
            (16, 24),
            (17, 18),
            (17, 19),
            (17, 20),
            (18, 20),
            (18, 21),
            (19, 20),
            (19, 22),
            (20, 21),
            (20, 22),
            (20, 23),
            (21, 23),
            (21, 24),
            (22, 23),
            (23, 24),
        ],
    },
    RawEntry {
        n: 25,
        claimed_total: 84,
        printed_total: "84",
        centers: &[
            [1, 0, 0],
            [2, 0, 0],
            [0, 1, 0],
            [1, 1, 0],
            [2, 1, 0],
            [0, 2, 0],
            [1, 2, 0],
            [2, 2, 0],
            [0, 0, 1],
            [1, 0, 1],
            [2, 0, 1],
            [0, 1, 1],
            [1, 1, 1],
            [2, 1, 1],
            [0, 2, 1],
            [1, 2, 1],
            [2, 2, 1],
            [1, 0, 2],
            [2, 0, 2],
            [0, 1, 2],
            [1, 1, 2],
            [2, 1, 2],
            [0, 2, 2],
            [1, 2, 2],
            [2, 2, 2],
        ],
        contacts: &[
            (1, 2),
            (1, 3),
            (1, 4),
            (1, 9),
            (1, 10),
            (2, 4),
            (2, 5),
            (2, 10),
            (2, 11),
            (3, 4),
            (3, 6),
            (3, 9),
            (3, 12),
            (4, 5),
            (4, 6),
            (4, 7),
            (4, 10),
            (4, 12),
            (4, 13),
            (5, 7),
            (5, 8),
            (5, 11),
            (5, 13),
            (5, 14),
            (6, 7),
            (6, 12),
            (6, 15),
            (7, 8),
            (7, 13),
            (7, 15),
            (7, 16),
            (8, 14),
            (8, 16),
            (8, 17),
            (9, 10),
            (9, 12),
            (9, 18),
            (9, 20),
            (10, 11),
            (10, 12),
            (10, 13),
            (10, 18),
            (10, 19),
            (10, 21),
            (11, 13),
            (11, 14),
            (11, 19),
            (11, 22),
            (12, 13),
            (12, 15),
            (12, 20),
            (12, 21),
            (12, 23),
            (13, 14),
            (13, 15),
            (13, 16),
            (13, 21),
            (13, 22),
            (13, 24),
            (14, 16),
            (14, 17),
            (14, 22),
            (14, 25),
            (15, 16),
            (15, 23),
            (15, 24),
            (16, 17),
            (16, 24),
            (16, 25),
            (17, 25),
            (18, 19),
            (18, 20),
            (18, 21),
            (19, 21),
            (19, 22),
            (20, 21),
            (20, 23),
            (21, 22),
            (21, 23),
            (21, 24),
            (22, 24),
            (22, 25),
            (23, 24),
            (24, 25),
        ],
    },
    RawEntry {
        n: 26,
        claimed_total: 87,
        printed_total: "87",
        centers: &[
            [0, 0, 0],
            [1, 0, 0],
            [2, 0, 0],
            [0, 1, 0],
            [1, 1, 0],
            [2, 1, 0],
            [0, 2, 0],
            [1, 2, 0],
            [2, 2, 0],
            [0, 0, 1],
            [1, 0, 1],
            [2, 0, 1],
            [0, 1, 1],
            [1, 1, 1],
            [2, 1, 1],
            [0, 2, 1],
            [1, 2, 1],
            [2, 2, 1],
            [1, 0, 2],
            [2, 0, 2],
            [0, 1, 2],
            [1, 1, 2],
            [2, 1, 2],
            [0, 2, 2],
            [1, 2, 2],
            [2, 2, 2],
        ],
        contacts: &[
            (1, 2),
            (1, 4),
            (1, 10),
            (2, 3),
            (2, 4),
            (2, 5),
            (2, 10),
            (2, 11),
            (3, 5),
            (3, 6),
            (3, 11),
            (3, 12),
            (4, 5),
            (4, 7),
            (4, 10),
            (4, 13),
            (5, 6),
            (5, 7),
            (5, 8),
            (5, 11),
            (5, 13),
            (5, 14),
            (6, 8),
            (6, 9),
            (6, 12),
            (6, 14),
            (6, 15),
            (7, 8),
            (7, 13),
            (7, 16),
            (8, 9),
            (8, 14),
            (8, 16),
            (8, 17),
            (9, 15),
            (9, 17),
            (9, 18),
            (10, 11),
            (10, 13),
            (10, 19),
            (10, 21),
            (11, 12),
            (11, 13),
            (11, 14),
            (11, 19),
            (11, 20),
            (11, 22),
            (12, 14),
            (12, 15),
            (12, 20),
            (12, 23),
            (13, 14),
            (13, 16),
            (13, 21),
            (13, 22),
            (13, 24),
            (14, 15),
            (14, 16),
            (14, 17),
            (14, 22),
            (14, 23),
            (14, 25),
            (15, 17),
            (15, 18),
            (15, 23),
            (15, 26),
            (16, 17),
            (16, 24),
            (16, 25),
            (17, 18),
            (17, 25),
            (17, 26),
            (18, 26),
            (19, 20),
            (19, 21),
            (19, 22),
            (20, 22),
            (20, 23),
            (21, 22),
            (21, 24),
            (22, 23),
            (22, 24),
            (22, 25),
            (23, 25),
            (23, 26),
            (24, 25),
            (25, 26),
        ],
    },
    RawEntry {
        n: 27,
        claimed_total: 90,
        printed_total: "90",
        centers: &[
            [0, 0, 0],
            [1, 0, 0],
            [2, 0, 0],
            [0, 1, 0],
            [1, 1, 0],
            [2, 1, 0],
            [0, 2, 0],
            [1, 2, 0],
            [2, 2, 0],
            [0, 0, 1],
            [1, 0, 1],
            [2, 0, 1],
            [0, 1, 1],
            [1, 1, 1],
            [2, 1, 1],
            [0, 2, 1],
            [1, 2, 1],
            [2, 2, 1],
            [0, 0, 2],
            [1, 0, 2],
            [2, 0, 2],
            [0, 1, 2],
            [1, 1, 2],
            [2, 1, 2],
            [0, 2, 2],
            [1, 2, 2],
            [2, 2, 2],
        ],
        contacts: &[
            (1, 2),
            (1, 4),
            (1, 10),
            (2, 3),
            (2, 4),
            (2, 5),
            (2, 10),
            (2, 11),
            (3, 5),
            (3, 6),
            (3, 11),
            (3, 12),
            (4, 5),
            (4, 7),
            (4, 10),
            (4, 13),
            (5, 6),
            (5, 7),
            (5, 8),
            (5, 11),
            (5, 13),
            (5, 14),
            (6, 8),
            (6, 9),
            (6, 12),
            (6, 14),
            (6, 15),
            (7, 8),
            (7, 13),
            (7, 16),
            (8, 9),
            (8, 14),
            (8, 16),
            (8, 17),
            (9, 15),
            (9, 17),
            (9, 18),
            (10, 11),
            (10, 13),
            (10, 19),
            (10, 20),
            (10, 22),
            (11, 12),
            (11, 13),
            (11, 14),
            (11, 20),
            (11, 21),
            (11, 23),
            (12, 14),
            (12, 15),
            (12, 21),
            (12, 24),
            (13, 14),
            (13, 16),
            (13, 22),
            (13, 23),
            (13, 25),
            (14, 15),
            (14, 16),
            (14, 17),
            (14, 23),
            (14, 24),
            (14, 26),
            (15, 17),
            (15, 18),
            (15, 24),
            (15, 27),
            (16, 17),
            (16, 25),
            (16, 26),
            (17, 18),
            (17, 26),
            (17, 27),
            (18, 27),
            (19, 20),
            (19, 22),
            (20, 21),
            (20, 22),
            (20, 23),
            (21, 23),
            (21, 24),
            (22, 23),
            (22, 25),
            (23, 24),
            (23, 25),
            (23, 26),
            (24, 26),
            (24, 27),
            (25, 26),
            (26, 27),
        ],
    },
];
