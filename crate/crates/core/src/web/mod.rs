//! Webs in an affine chart: symmetric forms, the surface `F(x, y, p) = 0`
//! in the contact space, its criminant and discriminant, and the foliation
//! cut out on it by the contact form `dy - p dx`.

mod criminant;
mod form;
mod planar;

pub use criminant::{
    contact_field, criminant, discriminant_curve, ContactField, Criminant, CurveSystem,
    Discriminant, Triangular,
};
pub use form::{
    normalize_web, parse_web, surface_to_web, symmetric_coeffs, web_to_surface, FORM_VARS, SURFACE_VARS,
    NormalizationReport, SurfaceF, WebForm,
};
pub use planar::{
    criminant_invariance, dicritical_on_component, foliation_singular_locus, invariant_curve_check,
    planar_restriction, ComponentInvariance, Dicritical, InvariantVerdict, PlanarForm, Restriction,
    SingularLocus,
};
