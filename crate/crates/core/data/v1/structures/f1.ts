structure f1
constants 1 0 −1
generators x
elements 1 0 −1 x −x x² −x²
