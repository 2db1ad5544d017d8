#pragma once

/// Umbrella header: the whole library in one include.

#include "owlet/corpus.hpp"
#include "owlet/diagnostic.hpp"
#include "owlet/dot.hpp"
#include "owlet/errors.hpp"
#include "owlet/iri.hpp"
#include "owlet/model.hpp"
#include "owlet/ontology.hpp"
#include "owlet/rdf.hpp"
#include "owlet/rdfxml.hpp"
#include "owlet/reasoner.hpp"
