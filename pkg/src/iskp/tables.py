"""Reference energy tables used as regression fixtures.

Tables 2-10: E_nm in eV for (molecule, cbar), rows (m, n) and four field
columns. Table 11: Kratzer ground-state magnitudes for De = 400, re = 4 in
reduced units. Table 12: H2 vibrational energies (eV) next to Morse-potential
literature values; it is exploratory only, since the parameters behind its
"present" column are not given.
"""

from __future__ import annotations

from dataclasses import dataclass

# (B_raw, Phi_raw) of the four columns of Tables 2-10, in column order
FIELD_COLUMNS = ((0.0, 0.0), (2.0, 0.0), (0.0, 2.0), (2.0, 2.0))
COLUMN_LABELS = ("B=0,Phi=0", "B=2,Phi=0", "B=0,Phi=2", "B=2,Phi=2")


@dataclass(frozen=True)
class EnergyTable:
    number: int
    molecule: str
    cbar: int
    rows: tuple  # (m, n, E[B=0,Phi=0], E[B=2,Phi=0], E[B=0,Phi=2], E[B=2,Phi=2])

    def column(self, index: int) -> list[tuple[int, int, float]]:
        return [(r[0], r[1], r[2 + index]) for r in self.rows]

    def entry(self, m: int, n: int, index: int) -> float:
        for r in self.rows:
            if r[0] == m and r[1] == n:
                return r[2 + index]
        raise KeyError((m, n))


ENERGY_TABLES = {
    2: EnergyTable(2, "H2", -1, (
        (0, 0, -0.013053, -0.013854, 0.103048, -3.55212),
        (0, 1, -0.065804, -0.069578, 0.043931, -4.10279),
        (0, 2, -0.16948, -0.179751, -0.065444, -4.68431),
        (0, 3, -0.319135, -0.341171, -0.220231, -5.29565),
        (1, 0, 0.015776, -0.027578, 0.248222, -3.79498),
        (1, 1, -0.039107, -0.129652, 0.182814, -4.36778),
        (1, 2, -0.144694, -0.283439, 0.067811, -4.97066),
        (1, 3, -0.296072, -0.486006, -0.092034, -5.60263),
        (-1, 0, 0.016833, 0.018142, 0.015776, -3.27284),
        (-1, 1, -0.035913, 0.010953, -0.039107, -3.80117),
        (-1, 2, -0.139578, -0.053657, -0.144694, -4.36115),
        (-1, 3, -0.289213, -0.172183, -0.296072, -4.95167),
    )),
    3: EnergyTable(3, "H2", 0, (
        (0, 0, -2.60098, -1.34027, -2.52351, -6.84623),
        (0, 1, -3.02159, -1.6982, -2.94639, -7.54765),
        (0, 2, -3.46683, -2.09468, -3.39374, -8.27534),
        (0, 3, -3.93573, -2.528, -3.86462, -9.02861),
        (1, 0, -2.58447, -1.57302, -2.41836, -7.1578),
        (1, 1, -3.00582, -1.95979, -2.84351, -7.87648),
        (1, 2, -3.45176, -2.38382, -3.29299, -8.62095),
        (1, 3, -3.92132, -2.84353, -3.76584, -9.39056),
        (-1, 0, -2.57296, -1.07359, -2.58447, -6.49654),
        (-1, 1, -2.9936, -1.4021, -3.00582, -7.18069),
        (-1, 2, -3.43886, -1.77049, -3.45176, -7.89159),
        (-1, 3, -3.90777, -2.17695, -3.92132, -8.62852),
    )),
    4: EnergyTable(4, "H2", 1, (
        (0, 0, -6.65084, -3.97026, -6.58486, -10.5487),
        (0, 1, -7.24556, -4.52822, -7.1809, -11.3709),
        (0, 2, -7.85971, -5.11683, -7.7963, -12.2165),
        (0, 3, -8.4929, -5.73507, -8.43068, -13.0851),
        (1, 0, -6.6377, -4.31164, -6.6377, -10.1554),
        (1, 1, -7.23286, -4.89028, -7.23286, -10.9634),
        (1, 2, -7.84743, -5.49886, -7.84743, -11.7952),
        (1, 3, -8.48103, -6.13643, -8.48103, -12.6502),
        (-1, 0, -6.62423, -3.59055, -6.49249, -10.9035),
        (-1, 1, -7.21894, -4.12773, -7.08983, -11.7399),
        (-1, 2, -7.83307, -4.69627, -7.70645, -12.5995),
        (-1, 3, -8.46623, -5.2951, -8.34199, -13.4817),
    )),
    5: EnergyTable(5, "HCl", -1, (
        (0, 0, -4.8842, -3.81271, -4.82949, -7.62984),
        (0, 1, -5.37112, -4.27799, -5.31739, -8.24004),
        (0, 2, -5.87571, -4.76469, -5.82291, -8.86802),
        (0, 3, -6.39751, -5.27222, -6.34561, -9.51341),
        (1, 0, -4.87253, -4.01808, -4.75515, -7.81566),
        (1, 1, -5.35977, -4.49397, -5.24404, -8.43432),
        (1, 2, -5.86467, -4.99099, -5.75051, -9.07058),
        (1, 3, -6.38676, -5.50853, -6.27411, -9.72408),
        (-1, 0, -4.86447, -3.57716, -4.87253, -7.41507),
        (-1, 1, -5.35141, -4.03196, -5.35977, -8.01692),
        (-1, 2, -5.85601, -4.5085, -5.86467, -8.63674),
        (-1, 3, -6.37782, -5.00613, -6.38676, -9.27416),
    )),
    6: EnergyTable(6, "HCl", 0, (
        (0, 0, -0.445611, 4.30785, -0.414125, -1.0847),
        (0, 1, -1.33944, 3.36605, -1.30808, -2.08829),
        (0, 2, -2.24379, 2.41323, -2.21255, -3.10278),
        (0, 3, -3.15867, 1.44942, -3.12756, -4.12818),
        (1, 0, -0.440385, 3.97846, -0.366858, -1.36856),
        (1, 1, -1.33427, 3.03263, -1.26087, -2.376),
        (1, 2, -2.23869, 2.07578, -2.16541, -3.39435),
        (1, 3, -3.15364, 1.10795, -3.08048, -4.42358),
        (-1, 0, -0.429794, 4.66087, -0.440385, -0.777565),
        (-1, 1, -1.32356, 3.72307, -1.33427, -1.77733),
        (-1, 2, -2.22785, 2.77425, -2.23869, -2.78801),
        (-1, 3, -3.14267, 1.81442, -3.15364, -3.80959),
    )),
    7: EnergyTable(7, "HCl", 1, (
        (0, 0, -2.0613, 4.69281, -2.03646, -0.761398),
        (0, 1, -3.12423, 3.55274, -3.09937, -1.95181),
        (0, 2, -4.19853, 2.40202, -4.17365, -3.15285),
        (0, 3, -5.28416, 1.24067, -5.25926, -4.36452),
        (1, 0, -2.05766, 4.35756, -2.05766, -0.445919),
        (1, 1, -3.12062, 3.21427, -3.12062, -1.63326),
        (1, 2, -4.19494, 2.06033, -4.19494, -2.83124),
        (1, 3, -5.28059, 0.895753, -5.28059, -4.03984),
        (-1, 0, -2.04737, 5.0478, -1.99771, -1.05702),
        (-1, 1, -3.11022, 3.91099, -3.06051, -2.25048),
        (-1, 2, -4.18443, 2.76352, -4.13468, -3.45456),
        (-1, 3, -5.26997, 1.60542, -5.22019, -4.66927),
    )),
    8: EnergyTable(8, "LiH", -1, (
        (0, 0, -3.64587, -2.45747, -3.60184, -6.08325),
        (0, 1, -4.02055, -2.80663, -3.97738, -6.58099),
        (0, 2, -4.40904, -3.17457, -4.36669, -7.09355),
        (0, 3, -4.81098, -3.56071, -4.76941, -7.62059),
        (1, 0, -3.63662, -2.64604, -3.54159, -6.27342),
        (1, 1, -4.01159, -3.00647, -3.91799, -6.77942),
        (1, 2, -4.40035, -3.38533, -4.30812, -7.30005),
        (1, 3, -4.80254, -3.78205, -4.71163, -7.835),
        (-1, 0, -3.62954, -2.24504, -3.63662, -5.86961),
        (-1, 1, -4.00424, -2.58294, -4.01159, -6.35916),
        (-1, 2, -4.39273, -2.93998, -4.40035, -6.86371),
        (-1, 3, -4.79468, -3.31555, -4.80254, -7.38292),
    )),
    9: EnergyTable(9, "LiH", 0, (
        (0, 0, -0.36375, 4.85352, -0.33877, -0.30138),
        (0, 1, -1.01847, 4.14038, -0.99357, -1.08083),
        (0, 2, -1.68203, 3.41769, -1.65721, -1.86961),
        (0, 3, -2.35444, 2.6855, -2.32971, -2.6677),
        (1, 0, -0.35972, 4.53924, -0.30093, -0.57817),
        (1, 1, -1.01448, 3.8217, -0.95574, -1.36169),
        (1, 2, -1.6781, 3.09463, -1.61941, -2.15453),
        (1, 3, -2.35056, 2.35807, -2.29192, -2.95667),
        (-1, 0, -0.35086, 5.18822, -0.35972, -0.00466),
        (-1, 1, -1.00551, 4.47944, -1.01448, -0.78007),
        (-1, 2, -1.669, 3.76109, -1.6781, -1.56482),
        (-1, 3, -2.34134, 3.03323, -2.35056, -2.35889),
    )),
    10: EnergyTable(10, "LiH", 1, (
        (0, 0, -0.9559, 6.57443, -0.93635, 1.29034),
        (0, 1, -1.72432, 5.70897, -1.70473, 0.37199),
        (0, 2, -2.50261, 4.83468, -2.48297, -0.55518),
        (0, 3, -3.29071, 3.95157, -3.27104, -1.49118),
        (1, 0, -0.95313, 6.24938, -0.95313, 1.59817),
        (1, 1, -1.72157, 5.38052, -1.72157, 0.68304),
        (1, 2, -2.49987, 4.50282, -2.49987, -0.24092),
        (1, 3, -3.28799, 3.61629, -3.28799, -1.1737),
        (-1, 0, -0.94464, 6.91656, -0.90558, 0.99964),
        (-1, 1, -1.71297, 6.05454, -1.67381, 0.07811),
        (-1, 2, -2.49117, 5.18369, -2.45192, -0.85226),
        (-1, 3, -3.27918, 4.304, -3.23986, -1.79145),
    )),
}

KRATZER_DE = 400.0
KRATZER_RE = 4.0
# lowest six levels: reference magnitudes and literature values
TABLE_11 = (
    (9.63436, 9.63435995),
    (27.87504, 27.8750413),
    (44.85073, 44.85072948),
    (60.67575, 60.67574666),
    (75.45179, 75.45178619),
    (89.26955, 89.26955046),
)

# present column followed by literature Morse values (None where not listed)
TABLE_12 = (
    (0.521945198, 0.5124, 0.5162, 0.516, 0.5137),
    (0.822531792, 0.9935, 1.0032, 1.0029, 0.9961),
    (1.092128962, 1.443, 1.4615, 1.4612, None),
    (1.334854672, 1.862, 1.8917, 1.8912, None),
    (1.554164922, 2.25, 2.2937, 2.2932, None),
    (1.752977462, 2.606, 2.6674, None, None),
    (1.933769336, 2.931, 3.0124, None, None),
)
TABLE_12_COLUMNS = ("present", "ref49", "ref46", "ref47", "ref48")

TABLE_IDS = tuple(range(2, 13))
