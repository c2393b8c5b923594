"""Published reference figures the model is checked against."""

# Poisson probability of n active users, n = 1..7, at a 4 Mbit/s mean cell rate.
ACTIVE_USER_PROBABILITIES = [0.07313, 0.14634, 0.19524, 0.19537, 0.15637, 0.10432, 0.05964]
PROB_GAIN_ABOVE_ONE = 0.433
PROB_GAIN_EQUAL_ONE = 0.567

# (demand Mbit/s/km2, cell power W, area power kW)
POWER_4G = [
    (0.0, 900.0, 4.14), (5.0, 961.1, 4.42), (10.0, 986.41, 4.54), (20.0, 1022.21, 4.70),
    (30.0, 1049.67, 4.83), (40.0, 1072.83, 4.94), (50.0, 1093.23, 5.03), (60.0, 1111.67, 5.11),
    (70.0, 1128.63, 5.19), (80.0, 1144.42, 5.26), (90.0, 1159.24, 5.33), (100.0, 1173.27, 5.40),
    (110.0, 1186.6, 5.46), (120.0, 1199.35, 5.52), (130.0, 1211.57, 5.57), (140.0, 1223.33, 5.63),
    (150.0, 1234.68, 5.68), (160.0, 1245.66, 5.73), (170.0, 1256.3, 5.78), (180.0, 1266.63, 5.83),
    (190.0, 1276.67, 5.87),
]
POWER_3G = [
    (0.0, 900.0, 11.16), (5.0, 961.1, 11.92), (10.0, 986.41, 12.23), (20.0, 1022.21, 12.68),
    (30.0, 1049.67, 13.02), (40.0, 1072.83, 13.30), (50.0, 1093.23, 13.56), (60.0, 1111.67, 13.78),
    (70.0, 1128.63, 14.00), (80.0, 1144.42, 14.19), (90.0, 1159.24, 14.37), (100.0, 1173.27, 14.55),
    (110.0, 1186.6, 14.71), (120.0, 1199.35, 14.87), (130.0, 1211.57, 15.02), (140.0, 1223.33, 15.17),
    (150.0, 1234.68, 15.31), (160.0, 1245.66, 15.45), (170.0, 1256.3, 15.58), (180.0, 1266.63, 15.71),
    (190.0, 1276.67, 15.83),
]
AREA_CAPACITY_4G = 198.66
AREA_CAPACITY_3G = 198.40

CAPEX_PER_CELL = 139_795
MARKETING_PER_CELL = 3_257
ANNUITY_UNDISCOUNTED = 12_553
ANNUITY_STANDARD = 15_773
SPECTRUM_PER_CELL = 3_295

COST_DEMANDS = [5.0] + [float(r) for r in range(10, 200, 10)]
TOTAL_COST_4G = [
    195152.00, 195296.72, 195501.39, 195658.44, 195790.84, 195907.48, 196012.94, 196109.92,
    196200.18, 196284.96, 196365.14, 196441.41, 196514.28, 196584.17, 196651.42, 196716.32,
    196779.08, 196839.91, 196898.97, 196956.42,
]
TOTAL_COST_3G = [
    294773.16, 295169.58, 295730.20, 296160.38, 296523.03, 296842.54, 297131.40, 297397.03,
    297644.27, 297876.49, 298096.13, 298305.03, 298504.63, 298696.08, 298880.29, 299058.04,
    299229.95, 299396.57, 299558.35, 299715.70,
]
COST_DELTA_4G = 1_804
COST_RATIO_4G_3G = 0.66

ANNUAL_ENERGY_4G = 51_445
ANNUAL_ENERGY_3G = 138_677

# fuel -> (share, g/kWh, 4G tonnes, 3G tonnes)
FUEL_TONNES = {
    "coal": (0.30, 960, 14.82, 39.94),
    "gas": (0.40, 443, 9.11, 24.65),
    "nuclear": (0.19, 66, 0.65, 1.74),
    "renewable": (0.09, 11, 0.05, 0.14),
    "other": (0.02, 25, 0.03, 0.07),
}
TOTAL_TONNES_4G = 24.66
TOTAL_TONNES_3G = 66.54
NETWORK_TONNES_4G = 39_135
NETWORK_TONNES_3G = 105_619
CO2_REDUCTION = 0.63

UNLIMITED_CHARGE_4G = 82.0
UNLIMITED_CHARGE_3G = 52.0

# 4G uptake percent -> paired 3G uptake percent in the published profit tables
UPTAKE_PAIRS = {3: 97, 6: 94, 9: 91, 20: 80, 30: 70, 40: 60, 90: 10}
