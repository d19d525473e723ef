//! Recognition and certification of nested and 2-nested (0,1)-matrices and
//! of nested and 2-nested split graphs.
//!
//! Every decision comes with a certificate that [`verify_certificate`] or
//! [`verify_graph_certificate`] checks without consulting the recognizers.

pub mod c1p;
pub mod certificate;
pub mod error;
pub mod generators;
pub mod graphs;
pub mod matrix;
pub mod oracle;
pub mod recognition;
pub mod stress;

pub use c1p::{test_c1p, C1pResult, TuckerWitness};
pub use certificate::{
    verify_certificate, verify_graph_certificate, CertClass, CertificateDocument, GraphCertificate,
    MatrixCertificate, Payload, Verdict,
};
pub use error::{Error, Result};
pub use generators::FamilySpec;
pub use graphs::{find_induced_gem, is_nested_graph, is_two_nested_graph, Graph};
pub use matrix::{BinaryMatrix, RowRelation};
pub use recognition::{extract_f_configuration, is_nested, is_two_nested};
