# Tests for the edge ideals toolkit
