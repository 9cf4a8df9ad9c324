//! Named scenes with default view windows.

use crate::locus::{Point, Scene};
use crate::numeric::{QuadraticNumber, Rational};
use crate::raster::Window;

#[derive(Debug, Clone)]
pub struct Preset {
    pub name: &'static str,
    pub description: &'static str,
    pub scene: Scene,
    pub window: Window,
}

fn scene(foci: Vec<Point>, s: i64) -> Scene {
    Scene::new(foci, Rational::from(s)).expect("preset scenes are valid")
}

fn window(xmin: f64, xmax: f64, ymin: f64, ymax: f64) -> Window {
    Window::new(xmin, xmax, ymin, ymax).expect("preset windows are valid")
}

fn sqrt3_apex() -> Point {
    Point::new(
        QuadraticNumber::zero(),
        QuadraticNumber::sqrt(3).expect("3 is squarefree"),
    )
}

pub const PRESET_NAMES: [&str; 6] = [
    "fig2",
    "fig3-lemniscate",
    "fig4-almost-circles",
    "fig5-dyncol",
    "fig6-dyncol",
    "van-schooten",
];

pub fn presets() -> Vec<Preset> {
    let collinear = || vec![Point::int(-1, 0), Point::int(0, 0), Point::int(1, 0)];
    vec![
        Preset {
            name: "fig2",
            description: "3-ellipse with foci (0,2), (1,0), (2,0) and s = 4",
            scene: scene(vec![Point::int(0, 2), Point::int(1, 0), Point::int(2, 0)], 4),
            window: window(-6.0, 9.0, -7.5, 7.5),
        },
        Preset {
            name: "fig3-lemniscate",
            description: "collinear foci (-1,0), (0,0), (1,0) with s = 0: a quartic lemniscate",
            scene: scene(collinear(), 0),
            window: window(-2.5, 2.5, -2.5, 2.5),
        },
        Preset {
            name: "fig4-almost-circles",
            description: "collinear foci (-1,0), (0,0), (1,0) with s = 1: two almost-circles",
            scene: scene(collinear(), 1),
            window: window(-4.0, 4.0, -4.0, 4.0),
        },
        Preset {
            name: "fig5-dyncol",
            description: "regular triangle (-1,0), (1,0), (0,√3) with s = 4, sign-colored",
            scene: scene(vec![Point::int(-1, 0), Point::int(1, 0), sqrt3_apex()], 4),
            window: window(-7.0, 7.0, -6.5, 7.5),
        },
        Preset {
            name: "fig6-dyncol",
            description: "collinear foci (-4,0), (0,0), (4,0) with s = 1, sign-colored",
            scene: scene(vec![Point::int(-4, 0), Point::int(0, 0), Point::int(4, 0)], 1),
            window: window(-10.0, 10.0, -10.0, 10.0),
        },
        Preset {
            name: "van-schooten",
            description: "regular triangle (-1,0), (1,0), (0,√3) with s = 0: two conjugate circles",
            scene: scene(vec![Point::int(-1, 0), Point::int(1, 0), sqrt3_apex()], 0),
            window: window(-2.0, 2.0, -1.5, 2.5),
        },
    ]
}

pub fn preset(name: &str) -> Option<Preset> {
    presets().into_iter().find(|p| p.name == name)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_listed_in_order() {
        let names: Vec<&str> = presets().iter().map(|p| p.name).collect();
        assert_eq!(names, PRESET_NAMES);
        assert!(preset("fig5-dyncol").is_some());
        assert!(preset("fig7").is_none());
    }

    #[test]
    fn surd_presets_share_radicand_three() {
        assert_eq!(preset("van-schooten").unwrap().scene.radicand(), Some(3));
        assert_eq!(preset("fig5-dyncol").unwrap().scene.radicand(), Some(3));
        assert_eq!(preset("fig2").unwrap().scene.radicand(), None);
    }
}
