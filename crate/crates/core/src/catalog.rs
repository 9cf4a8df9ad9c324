//! Published implicit equations of the preset scenes, in classic display order.
//! The golden checks compare derived closures against these term for term.

/// Foci (0,2), (1,0), (2,0) with s = 4.
pub const FIG2_CURVE: &str = "9x^8 + 9y^8 + 36x^2y^6 + 54x^4y^4 + 36x^6y^2 - 72x^7 - 48y^7 - 72xy^6 - 144x^2y^5 - 216x^3y^4 - 144x^4y^3 - 216x^5y^2 - 48x^6y - 220x^6 - 372y^6 + 480xy^5 - 964x^2y^4 + 960x^3y^3 - 812x^4y^2 + 480x^5y + 2136x^5 + 1712y^5 + 1656xy^4 + 2080x^2y^3 + 3792x^3y^2 + 368x^4y + 446x^4 + 2846y^4 - 8256xy^3 + 5452x^2y^2 - 7104x^3y - 14424x^3 - 6928y^3 - 22008xy^2 + 688x^2y + 4980x^2 + 3132y^2 + 17376xy + 27720x + 3600y - 14175";

/// Foci (−1,0), (0,0), (1,0) with s = 1: the two almost-circles.
pub const ALMOST_CIRCLES: &str = "9x^8 + 9y^8 + 36x^2y^6 + 54x^4y^4 + 36x^6y^2 - 100x^6 - 4y^6 - 108x^2y^4 - 204x^4y^2 + 182x^4 - 10y^4 - 84x^2y^2 - 100x^2 - 4y^2 + 9";

/// Same foci with s = 0: a lemniscate of Booth.
pub const LEMNISCATE: &str = "3x^4 + 6x^2y^2 - 12x^2 + 3y^4 + 4y^2";

/// Foci (−1,0), (1,0), (0,√3) with s = 0: the circumcircle and its mirror image.
pub const TWO_CIRCLES: &str = "3x^4 + 3y^4 + 6x^2y^2 - 6x^2 - 10y^2 + 3";
