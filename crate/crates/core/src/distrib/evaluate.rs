//! Evaluation of a reduced sentence to its meaning.
//!
//! The reduction plan tells which wire feeds which. Noun phrases are
//! evaluated bottom-up from the wire that carries them:
//!
//! - a noun contributes its vector;
//! - an adjective multiplies the phrase it modifies pointwise by its vector;
//! - a preposition phrase multiplies the phrase it modifies pointwise by the
//!   noun vector of its prepositional object;
//! - a relative clause `H who V O` yields `H ⊙ (V · o)` with `V` read
//!   subject-first when the head is the subject (and object-first when it is
//!   the object).
//!
//! The open sentence wire belongs to the main verb (possibly through
//! adverbs, which act as the identity). With subject `u` and object `v` the
//! meaning is `Σ_ij u_i v_j V_ij n_i ⊗ n_j`.

use alloc::format;
use alloc::string::ToString;
use num_traits::Zero;

use super::meaning::SentenceMeaning;
use super::model::{DistribModel, NounVector};
use super::DistribError;
use crate::grammar::{BasicType, Category, ReductionPlan, Role, TypedToken};
use crate::numeric::Rational;

const MAX_DEPTH: usize = 64;

/// Evaluates an accepted reduction of `tokens` in `model`.
pub fn evaluate(
    plan: &ReductionPlan,
    tokens: &[TypedToken],
    model: &DistribModel,
) -> Result<SentenceMeaning, DistribError> {
    let open = plan.open_wires();
    if open.len() != 1 || plan.wires()[open[0]].simple.base() != BasicType::Sentence {
        return Err(DistribError::NotReduced);
    }
    let ev = Evaluator { plan, tokens, model };
    ev.clause(open[0], 0)
}

struct Evaluator<'a> {
    plan: &'a ReductionPlan,
    tokens: &'a [TypedToken],
    model: &'a DistribModel,
}

impl Evaluator<'_> {
    fn unsupported(&self, token: usize, what: &str) -> DistribError {
        DistribError::Unsupported(format!("`{}` {what}", self.tokens[token].surface))
    }

    fn partner(&self, wire: usize) -> Result<usize, DistribError> {
        self.plan.partner(wire).ok_or(DistribError::NotReduced)
    }

    fn wire(&self, token: usize, slot: usize) -> Result<usize, DistribError> {
        self.plan.wire_index(token, slot).ok_or(DistribError::NotReduced)
    }

    /// Follows a sentence wire through adverbs to the verb that owns it.
    fn verb_behind(&self, mut s_wire: usize, depth: usize) -> Result<usize, DistribError> {
        for _ in depth..MAX_DEPTH {
            let token = self.plan.wires()[s_wire].token;
            match self.tokens[token].entry.category {
                Category::Adverb => s_wire = self.partner(self.wire(token, 0)?)?,
                c if c.is_verbal() => return Ok(token),
                _ => return Err(self.unsupported(token, "does not produce a sentence")),
            }
        }
        Err(DistribError::Unsupported("nesting too deep".to_string()))
    }

    /// Argument wires of a verb as `(subject wire, object wire)`.
    fn argument_wires(&self, verb: usize) -> Result<(usize, usize), DistribError> {
        let roles = self.tokens[verb].entry.roles();
        let find = |role: Role| {
            roles
                .iter()
                .position(|r| *r == Some(role))
                .ok_or_else(|| self.unsupported(verb, "has no argument order"))
                .and_then(|slot| self.wire(verb, slot))
        };
        Ok((find(Role::Subject)?, find(Role::Object)?))
    }

    fn clause(&self, s_wire: usize, depth: usize) -> Result<SentenceMeaning, DistribError> {
        let verb = self.verb_behind(s_wire, depth)?;
        let (subj_wire, obj_wire) = self.argument_wires(verb)?;
        let subject = self.phrase(self.partner(subj_wire)?, depth + 1)?;
        let object = self.phrase(self.partner(obj_wire)?, depth + 1)?;
        let matrix = self.model.verb(self.tokens[verb].entry.key())?;
        let n = matrix.dim();
        super::model::check_dims(n, subject.dim())?;
        super::model::check_dims(n, object.dim())?;
        let mut m = SentenceMeaning::zero();
        for (i, u) in subject.coords().iter().enumerate() {
            for (j, v) in object.coords().iter().enumerate() {
                m.add(i, j, u * v * matrix.subject_object(i, j));
            }
        }
        Ok(m)
    }

    /// Value of the noun phrase emitted on `wire`.
    fn phrase(&self, wire: usize, depth: usize) -> Result<NounVector, DistribError> {
        if depth > MAX_DEPTH {
            return Err(DistribError::Unsupported("nesting too deep".to_string()));
        }
        let w = self.plan.wires()[wire];
        let token = w.token;
        let entry = &self.tokens[token].entry;
        let modified = |this: &Self| -> Result<NounVector, DistribError> {
            let input = entry
                .ptype
                .simples()
                .iter()
                .position(|t| t.base() == BasicType::Noun && t.adjoint() != 0)
                .ok_or_else(|| this.unsupported(token, "has no noun argument"))?;
            this.phrase(this.partner(this.wire(token, input)?)?, depth + 1)
        };
        match entry.category {
            Category::Noun => Ok(self.model.noun(entry.key())?.clone()),
            Category::Adjective => modified(self)?.hadamard(self.model.adjective(entry.key())?),
            Category::PrepositionPhrase => {
                let object = entry
                    .object
                    .as_deref()
                    .ok_or_else(|| self.unsupported(token, "has no prepositional object"))?;
                modified(self)?.hadamard(self.model.noun(object)?)
            }
            Category::RelativePronounSubject | Category::RelativePronounObject => {
                if w.slot != 1 {
                    return Err(self.unsupported(token, "is used through an inner wire"));
                }
                self.relative_clause(token, depth)
            }
            _ => Err(self.unsupported(token, "does not produce a noun phrase")),
        }
    }

    fn relative_clause(&self, pronoun: usize, depth: usize) -> Result<NounVector, DistribError> {
        let entry = &self.tokens[pronoun].entry;
        let head = self.phrase(self.partner(self.wire(pronoun, 0)?)?, depth + 1)?;
        let s_slot = entry
            .ptype
            .simples()
            .iter()
            .position(|t| t.base() == BasicType::Sentence)
            .ok_or_else(|| self.unsupported(pronoun, "has no sentence wire"))?;
        let verb = self.verb_behind(self.partner(self.wire(pronoun, s_slot)?)?, depth + 1)?;
        let (a, b) = self.argument_wires(verb)?;
        let owner = |w: usize| -> Result<usize, DistribError> { Ok(self.plan.wires()[self.partner(w)?].token) };
        let other_wire = if owner(a)? == pronoun {
            b
        } else if owner(b)? == pronoun {
            a
        } else {
            return Err(self.unsupported(pronoun, "is not linked to its verb"));
        };
        let other = self.phrase(self.partner(other_wire)?, depth + 1)?;
        let matrix = self.model.verb(self.tokens[verb].entry.key())?;
        let n = matrix.dim();
        super::model::check_dims(n, head.dim())?;
        super::model::check_dims(n, other.dim())?;
        let head_is_subject = entry.category == Category::RelativePronounSubject;
        let coords = (0..n)
            .map(|k| {
                let applied = (0..n).fold(Rational::zero(), |acc, j| {
                    let v = if head_is_subject {
                        matrix.subject_object(k, j)
                    } else {
                        matrix.subject_object(j, k)
                    };
                    acc + v * other.coords()[j]
                });
                head.coords()[k] * applied
            })
            .collect();
        NounVector::new(coords)
    }
}
