/**
 * Okabe-Ito colorblind-safe palette (Okabe & Ito, 2008).
 * Every color drawn anywhere in the UI must come from this set.
 */
export const OKABE_ITO = {
  black: "#000000",
  orange: "#E69F00",
  skyBlue: "#56B4E9",
  bluishGreen: "#009E73",
  yellow: "#F0E442",
  blue: "#0072B2",
  vermillion: "#D55E00",
  reddishPurple: "#CC79A7",
} as const;

export const CURVE_COLOR = OKABE_ITO.blue;
export const REFERENCE_COLOR = OKABE_ITO.vermillion;
export const TEXT_COLOR = OKABE_ITO.black;
export const WARNING_COLOR = OKABE_ITO.orange;
export const ACCENT_COLOR = OKABE_ITO.bluishGreen;
