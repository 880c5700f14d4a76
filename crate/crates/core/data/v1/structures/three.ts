structure three
constants 1 0 −1
generators
elements 1 0 −1
