//! Distance tables along optimal paths between the 24 candidate localities
//! and the four reference points, stored exactly as published (two decimals).
//! Row names are the printed spellings; they are normalized on load.

/// Kilometres.
pub(crate) const KM_ROWS: [(&str, [f64; 4]); 24] = [
    ("Albaladejo", [72.80, 94.40, 106.92, 53.68]),
    ("Alcubillas", [55.88, 66.76, 86.64, 67.08]),
    ("Alhambra", [72.08, 64.04, 68.72, 53.16]),
    ("Almedina", [59.28, 84.04, 99.40, 65.04]),
    ("Cañamares", [78.96, 94.48, 102.16, 46.16]),
    ("Carrizosa", [70.44, 72.28, 77.20, 52.52]),
    ("Castellar de Santiago", [30.00, 94.48, 116.52, 92.28]),
    ("Cózar", [57.52, 77.72, 95.72, 67.44]),
    ("Fuencollana", [71.56, 76.36, 87.00, 55.68]),
    ("Membrilla", [74.88, 39.44, 76.00, 78.44]),
    ("Montiel", [68.36, 84.92, 97.44, 56.72]),
    ("Ossa de Montiel", [98.68, 75.08, 68.68, 23.60]),
    ("Puebla del Príncipe", [61.44, 90.80, 106.16, 65.04]),
    ("Ruidera", [86.92, 65.96, 64.64, 36.04]),
    ("Sta. Cruz de Cañamos", [66.96, 90.84, 104.40, 57.28]),
    ("La Solana", [70.44, 47.84, 66.76, 69.20]),
    ("Terrinches", [69.64, 94.16, 107.72, 56.84]),
    ("Torre de Juan Abad", [49.12, 86.04, 104.16, 73.16]),
    ("Torres de Montiel", [66.36, 80.32, 95.68, 90.32]),
    ("Torrenueva", [32.64, 81.68, 103.72, 59.04]),
    ("Villahermosa", [74.00, 83.76, 91.44, 48.28]),
    ("Villamanrique", [55.12, 92.08, 108.20, 71.56]),
    ("Villanueva de la Fuente", [82.00, 99.48, 107.48, 42.16]),
    ("Villanueva de los Infantes", [66.24, 71.48, 87.04, 61.00]),
];

/// Hours.
pub(crate) const HOURS_ROWS: [(&str, [f64; 4]); 24] = [
    ("Albaladejo", [23.48, 30.45, 34.49, 17.32]),
    ("Alcubillas", [18.03, 21.54, 27.95, 21.64]),
    ("Alhambra", [23.25, 20.66, 22.17, 17.15]),
    ("Almedina", [19.12, 27.11, 32.06, 20.98]),
    ("Cañamares", [25.47, 30.48, 32.95, 14.89]),
    ("Carrizosa", [22.72, 23.32, 24.90, 16.94]),
    ("Castellar de Santiago", [9.68, 30.48, 37.59, 29.77]),
    ("Cózar", [18.55, 25.07, 30.88, 21.75]),
    ("Fuenllana", [23.08, 24.63, 28.06, 17.96]),
    ("Membrilla", [24.15, 12.72, 24.52, 25.30]),
    ("Montiel", [22.05, 27.39, 31.43, 18.30]),
    ("Ossa de Montiel", [31.83, 24.22, 22.15, 7.61]),
    ("Puebla del Príncipe", [19.82, 29.29, 34.25, 20.98]),
    ("Ruidera", [28.04, 21.28, 20.85, 11.63]),
    ("Sta. Cruz de Cañamos", [21.60, 29.30, 33.68, 18.48]),
    ("La Solana", [22.72, 15.43, 21.54, 22.32]),
    ("Terrinches", [22.46, 30.37, 34.75, 18.34]),
    ("Torre de Juan Abad", [15.85, 27.75, 33.60, 23.60]),
    ("Torres de Montiel", [21.41, 25.91, 30.86, 29.14]),
    ("Torrenueva", [10.53, 26.35, 33.46, 19.05]),
    ("Villahermosa", [23.87, 27.02, 29.50, 15.57]),
    ("Villamanrique", [17.78, 29.70, 34.90, 23.08]),
    ("Villanueva de la Fuente", [26.45, 32.09, 34.67, 13.60]),
    ("Villanueva de los Infantes", [21.37, 23.06, 28.08, 19.68]),
];
